#ifndef HCV_CLI_HPP
#define HCV_CLI_HPP

namespace hcv {

/// Command-line front end (verify / sweep / tables / render).
/// Exit codes: 0 ok, 1 runtime failure (render sampling, sink I/O),
/// 2 failed verification, 3 undecided, 64 bad flags or parameter ranges.
int cli_main(int argc, const char* const* argv);

}  // namespace hcv

#endif
