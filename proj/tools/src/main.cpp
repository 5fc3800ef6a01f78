#include "app.hpp"

#include <cmred/error.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

int emit(const cmred::app::Report& report, cmred::app::Format format) {
  using cmred::app::Format;
  std::cout << (format == Format::Json ? cmred::app::render_json(report)
                                       : cmred::app::render_text(report));
  return cmred::app::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cmred::app;

  CLI::App cli{"Exact class functions of unitary CM types and the double-transitivity criterion"};
  cli.require_subcommand(1);
  cli.set_version_flag("--version", version());

  RunConfig config;
  std::string format = "json";
  std::size_t eps_max = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--large", config.allow_large, "Allow the large zoo groups (sp6f2)");
  };

  CLI::App* zoo = cli.add_subcommand("zoo", "Built-in groups");
  zoo->require_subcommand(1);
  CLI::App* zoo_list = zoo->add_subcommand("list", "List the built-in group families");
  add_common(zoo_list);

  CLI::App* verify = cli.add_subcommand("verify", "Run every identity check on a group");
  verify->add_option("spec", config.source, "Zoo spec such as sym:4, or file:<path>")->required();
  CLI::Option* verify_eps = verify->add_option("--eps-max", eps_max, "Largest eps examined");
  verify->add_option("--brute-cap", config.brute_cap,
                     "Largest |G x Z/2| for the definition-level path");
  verify->add_option("--seed", config.seed, "Seed for sampled CM types");
  add_common(verify);

  CLI::App* orbits = cli.add_subcommand("orbits", "Orbits of CM types under the Galois group");
  orbits->add_option("spec", config.source, "Zoo spec or file:<path>")->required();
  CLI::Option* orbits_eps = orbits->add_option("--eps-max", eps_max, "Largest eps tabulated");
  add_common(orbits);

  CLI::App* certify = cli.add_subcommand("certify", "Test the double-transitivity criterion");
  certify->add_option("spec", config.source, "Zoo spec or file:<path>")->required();
  add_common(certify);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (zoo_list->parsed()) config.command = Command::ZooList;
  if (verify->parsed()) config.command = Command::Verify;
  if (orbits->parsed()) config.command = Command::Orbits;
  if (certify->parsed()) config.command = Command::Certify;
  if (verify_eps->count() > 0 || orbits_eps->count() > 0) config.eps_max = eps_max;
  config.format = format == "text" ? Format::Text : Format::Json;

  try {
    return emit(run(config), config.format);
  } catch (const cmred::ParseError& e) {
    std::cerr << "cmred: parse error at offset " << e.position() << ": " << e.what() << "\n";
  } catch (const cmred::Error& e) {
    std::cerr << "cmred: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "cmred: internal error: " << e.what() << "\n";
  }
  return 2;
}
