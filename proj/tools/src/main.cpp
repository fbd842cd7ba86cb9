#include <exception>
#include <iostream>

#include "clifford_lab/cli/commands.hpp"
#include "clifford_lab/errors.hpp"

int main(int argc, char** argv) {
  using namespace clifford_lab;
  try {
    const auto parsed = cli::parse_command_line(argc, argv);
    if (!parsed.config) {
      std::cout << parsed.help_text;
      return 0;
    }
    const auto result = cli::run(*parsed.config);
    cli::emit(cli::render(result, parsed.config->format), parsed.config->out);
    return result.exit_code();
  } catch (const cli::UsageError& e) {
    std::cerr << "clifford_lab: " << e.what() << '\n';
  } catch (const DomainError& e) {
    std::cerr << "clifford_lab: invalid input: " << e.what() << '\n';
  } catch (const IntegrationError& e) {
    std::cerr << "clifford_lab: integration failed: " << e.what() << '\n';
  }
  return 2;
}
