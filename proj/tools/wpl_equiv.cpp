#include <iostream>

#include "wpl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  wpl::CommandResult r = wpl::run(args);
  for (const auto& d : r.diagnostics) std::cerr << d << "\n";
  if (r.status == wpl::CommandStatus::Ok) {
    if (!r.text.empty()) {
      std::cout << r.text;
    } else {
      std::cout << r.payload.dump(2) << "\n";
    }
  }
  return r.exit_code;
}
