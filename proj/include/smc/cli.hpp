#pragma once
namespace smc { int cli_main(int argc, char** argv); }
