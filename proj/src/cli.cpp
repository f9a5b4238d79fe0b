#include "smc/cli.hpp"
namespace smc { int cli_main(int, char**) { return 0; } }
