#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  try {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const cheb::cli::RunConfig config = cheb::cli::parse_args(args);
    return cheb::cli::run(config);
  } catch (const cheb::cli::UsageHelp& help) {
    std::cout << help.what();
    return 0;
  } catch (const cheb::cli::UsageError& e) {
    std::cerr << "chebeval: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "chebeval: " << e.what() << '\n';
    return 2;
  }
}
