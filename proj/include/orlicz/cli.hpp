#ifndef ORLICZ_CLI_HPP
#define ORLICZ_CLI_HPP

namespace orlicz {

/// Entry point of the orlicz-greedy command line tool. Returns the process
/// exit status: 0 on success, nonzero on any error.
int run_cli(int argc, char** argv);

}  // namespace orlicz

#endif
