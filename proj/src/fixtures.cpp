#include "plethys/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef PLETHYS_FIXTURE_DIR
#define PLETHYS_FIXTURE_DIR "fixtures"
#endif

namespace plethys::fixtures {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<CountCheck> count_checks(const nlohmann::json& j, const char* key) {
  std::vector<CountCheck> out;
  if (!j.contains(key)) return out;
  for (const auto& c : j.at(key)) {
    out.push_back({c.at("degrees").get<std::vector<int>>(), BigInt(c.at("count").get<std::string>())});
  }
  return out;
}

}  // namespace

std::filesystem::path default_directory() {
  if (const char* env = std::getenv("PLETHYS_FIXTURE_DIR"); env != nullptr && *env != '\0') return env;
  return PLETHYS_FIXTURE_DIR;
}

Manifest load(const std::filesystem::path& dir) {
  Manifest m;
  try {
    const nlohmann::json j = nlohmann::json::parse(read_file(dir / "manifest.json"));
    for (const auto& t : j.at("fixtures")) {
      Table table;
      table.name = t.at("name").get<std::string>();
      table.species = t.at("species").get<std::string>();
      table.file = t.at("file").get<std::string>();
      table.source = t.at("source").get<std::string>();
      table.sorts = t.at("sorts").get<int>();
      table.top_degree = t.at("top_degree").get<int>();
      table.complete_degrees = t.at("complete_degrees").get<std::vector<int>>();
      for (const auto& f : t.at("flags")) {
        table.flags.push_back({f.at("kind").get<std::string>(), f.at("monomial").get<std::string>(),
                               f.at("printed").get<std::string>(), f.at("stored").get<std::string>(),
                               f.at("reason").get<std::string>()});
      }
      table.labeled = count_checks(t, "labeled");
      table.unlabeled = count_checks(t, "unlabeled");
      table.terms = parse_cycle_index(read_file(dir / table.file), table.sorts, table.top_degree);
      m.tables.push_back(std::move(table));
    }
    for (const auto& d : j.at("decompositions")) {
      Decomposition dec;
      dec.name = d.at("name").get<std::string>();
      dec.target = d.at("target").get<std::string>();
      dec.expression = d.at("expression").get<std::string>();
      dec.printed = d.value("printed", "");
      dec.reason = d.value("reason", "");
      dec.source = d.at("source").get<std::string>();
      dec.top_degree = d.at("top_degree").get<int>();
      m.decompositions.push_back(std::move(dec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("fixture manifest: " + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("fixture table: " + std::string(e.what()));
  }
  return m;
}

Manifest load() { return load(default_directory()); }

PMonomial parse_monomial(std::string_view text, int sorts) {
  if (text == "1") return PMonomial();
  CycleIndex f = parse_cycle_index(std::string("1 * ") + std::string(text), sorts, 1000);
  if (f.size() != 1) throw std::invalid_argument("not a single monomial: " + std::string(text));
  return f.terms().begin()->first;
}

}  // namespace plethys::fixtures
