// Command-line harness: runs one named check and writes a JSON report, or
// dumps root data, convex orders, structure constants and exponent tables.
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperalg/checks.hpp"
#include "hyperalg/serialize.hpp"

#ifndef HYPERALG_DATA_DIR
#define HYPERALG_DATA_DIR "data"
#endif

namespace {

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw hyperalg::ConfigError("empty reduced word");
  return out;
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for hyperalgebra subalgebras"};
  app.set_version_flag("--version", std::string(hyperalg::kVersion));

  std::string check, type, word, out, config_path, expectations_path;
  int rank = 0, p = 2, r = 1, max_exp = 4;
  std::uint64_t budget = 0, samples = 0, seed = 1;
  bool omit_timing = false, list = false;

  auto* o_check = app.add_option("--check", check, "Check id")->check(CLI::IsMember(hyperalg::check_ids()));
  auto* o_type = app.add_option("--type", type, "Cartan type letter, optionally with rank (B or B3)");
  auto* o_rank = app.add_option("--rank", rank, "Rank");
  auto* o_p = app.add_option("--p", p, "Prime");
  auto* o_r = app.add_option("--r", r, "Level");
  auto* o_word = app.add_option("--word", word, "Reduced word of the longest element, comma separated, 1-based");
  auto* o_budget = app.add_option("--budget", budget, "Per-component capacity cap (default HYPERALG_BUDGET or 2^20)");
  auto* o_samples = app.add_option("--samples", samples, "Random samples for sampled sub-checks");
  auto* o_max = app.add_option("--max-exp", max_exp, "Largest exponent for commutator checks");
  auto* o_seed = app.add_option("--seed", seed, "Random seed");
  app.add_option("--config", config_path, "JSON config file; flags override it");
  app.add_option("--expectations", expectations_path, "Expectations file (default data/expectations.json)");
  app.add_option("--out", out, "Output path (default stdout)");
  app.add_flag("--omit-timing", omit_timing, "Write wall_ms as null for byte-stable reports");
  app.add_flag("--list", list, "List check ids");

  auto* dump = app.add_subcommand("dump", "Write root system, order, constants or exponent table data");
  dump->fallthrough();
  std::string artifact;
  dump->add_option("artifact", artifact, "rootsys | order | constants | tables")
      ->required()
      ->check(CLI::IsMember({"rootsys", "order", "constants", "tables"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list) {
    for (const auto& id : hyperalg::check_ids()) std::cout << id << "\n";
    return 0;
  }

  hyperalg::CheckConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw hyperalg::ConfigError("cannot open config " + config_path);
      auto doc = nlohmann::json::parse(in);
      if (doc.contains("config")) doc = doc["config"];
      cfg.merge(doc);
    }
    if (o_check->count()) cfg.check = check;
    if (o_type->count()) {
      if (type.empty()) throw hyperalg::ConfigError("empty type");
      cfg.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
      if (type.size() > 1) cfg.rank = std::stoi(type.substr(1));
    }
    if (o_rank->count()) cfg.rank = rank;
    if (o_p->count()) cfg.p = p;
    if (o_r->count()) cfg.r = r;
    if (o_word->count()) cfg.word = parse_word(word);
    if (o_budget->count()) cfg.budget = budget;
    if (o_samples->count()) cfg.samples = samples;
    if (o_max->count()) cfg.max_exp = max_exp;
    if (o_seed->count()) cfg.seed = seed;
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  if (*dump) {
    try {
      if (!hyperalg::detail::valid_type(cfg.letter, cfg.rank)) throw hyperalg::ConfigError("invalid type");
      const auto rs = hyperalg::build_root_system(cfg.letter, cfg.rank);
      std::string text;
      if (artifact == "rootsys") text = hyperalg::rootsys_json(rs, cfg.word).dump(2) + "\n";
      else if (artifact == "order") text = hyperalg::order_json(rs, cfg.word).dump(2) + "\n";
      else if (artifact == "constants") text = hyperalg::constants_csv(rs);
      else text = hyperalg::tables_json(rs, cfg.p, cfg.r).dump(2) + "\n";
      return write_output(out, text);
    } catch (const std::exception& e) {
      std::cerr << "dump failed: " << e.what() << "\n";
      return 2;
    }
  }

  if (cfg.check.empty()) {
    std::cerr << "--check or dump is required\n";
    return 2;
  }

  hyperalg::Expectations ex;
  try {
    if (!expectations_path.empty()) {
      ex = hyperalg::Expectations::load(expectations_path);
    } else {
      const std::string fallback = std::string(HYPERALG_DATA_DIR) + "/expectations.json";
      if (std::filesystem::exists(fallback)) ex = hyperalg::Expectations::load(fallback);
    }
  } catch (const std::exception& e) {
    std::cerr << "expectations: " << e.what() << "\n";
    return 2;
  }

  const auto rep = hyperalg::run_check(cfg, ex);
  if (const int rc = write_output(out, rep.to_json(!omit_timing).dump(2) + "\n")) return rc;
  std::cerr << cfg.check << " " << cfg.type_name() << " p=" << cfg.p << " r=" << cfg.r << ": "
            << (rep.pass() ? "PASS" : "FAIL") << (rep.reason.empty() ? "" : " (" + rep.reason + ")") << "\n";
  return rep.exit_code();
}
