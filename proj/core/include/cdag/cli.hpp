#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdag {

/// Command-line front end. Subcommands:
///
///   check FILE
///   build FILE --emit {gmin|gu} --format {dot|json}
///   dsep FILE --x LIST --y LIST --z LIST [--do LIST] [--underline LIST]
///             [--witness] [--oracle] [--oracle-bound N]
///   docalc FILE --rule {1|2} --x LIST --y LIST --z LIST --w LIST
///   fuzz --cases N --seed S [size/bound options]
///
/// Exit status: 0 the query was answered (separated vs connected is reported
/// in the output, never in the status), 2 input error, 3 oracle disagreement,
/// 1 unexpected failure. CDAG_ORACLE_BOUND overrides the default oracle
/// bound.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdag
