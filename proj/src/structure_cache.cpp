#include "chevalley/structure_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace chevalley {

std::uint64_t table_checksum(const BracketTable& t) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::int64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  const int m = t.dimension();
  mix(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (const Term& term : t.bracket(a, b)) {
        mix(a);
        mix(b);
        mix(term.index);
        mix(term.coef);
      }
  return h;
}

namespace {

std::string hex(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << x;
  return os.str();
}

}  // namespace

nlohmann::json structure_to_json(const ChevalleyStructure& cs) {
  nlohmann::json cells = nlohmann::json::array();
  const int m = cs.dimension();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      auto terms = cs.bracket(a, b);
      if (terms.empty()) continue;
      nlohmann::json ts = nlohmann::json::array();
      for (const Term& t : terms) ts.push_back({t.index, t.coef});
      cells.push_back({a, b, ts});
    }
  return {
      {"schema_version", 1},
      {"family", std::string(1, family_letter(cs.roots().spec().family))},
      {"rank", cs.rank()},
      {"dimension", m},
      {"checksum", hex(table_checksum(cs.table()))},
      {"cells", cells},
  };
}

ChevalleyStructure structure_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version").get<int>() != 1) throw CacheError("unsupported cache schema");
    const RootSystemSpec spec{parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>()};
    RootSystem rs = RootSystem::build(spec);
    const int m = rs.algebra_dimension();
    if (j.at("dimension").get<int>() != m) throw CacheError("cache dimension mismatch for " + spec.name());

    std::map<std::pair<int, int>, std::vector<Term>> cells;
    for (const auto& cell : j.at("cells")) {
      std::vector<Term> terms;
      for (const auto& t : cell.at(2)) terms.push_back({t.at(0).get<int>(), t.at(1).get<std::int64_t>()});
      const int a = cell.at(0).get<int>(), b = cell.at(1).get<int>();
      if (a < 0 || b < 0 || a >= m || b >= m) throw CacheError("cache cell out of range");
      for (const Term& t : terms)
        if (t.index < 0 || t.index >= m) throw CacheError("cache term out of range");
      cells[{a, b}] = std::move(terms);
    }
    BracketTable table(m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        auto it = cells.find({a, b});
        table.push_cell(it == cells.end() ? std::vector<Term>{} : it->second);
      }
    if (hex(table_checksum(table)) != j.at("checksum").get<std::string>()) {
      throw CacheError("cache checksum mismatch for " + spec.name());
    }
    if (find_antisymmetry_failure(table) || find_jacobi_failure(table)) {
      throw CacheError("cached table for " + spec.name() + " fails the Jacobi check");
    }
    return structure_from_table(rs, std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("malformed cache entry: ") + e.what());
  }
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const RootSystemSpec& spec) {
  return dir / (spec.name() + ".json");
}

void save_structure(const ChevalleyStructure& cs, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto target = cache_file(dir, cs.roots().spec());
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw CacheError("cannot write " + tmp);
    out << structure_to_json(cs).dump() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

std::optional<ChevalleyStructure> load_structure(const RootSystemSpec& spec,
                                                 const std::filesystem::path& dir) {
  const auto file = cache_file(dir, spec);
  std::ifstream in(file);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CacheError("unreadable cache file " + file.string());
  }
  ChevalleyStructure cs = structure_from_json(j);
  if (cs.roots().spec() != spec) throw CacheError("cache file " + file.string() + " holds another type");
  return cs;
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* v = std::getenv(kCacheEnvVar);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

std::shared_ptr<const ChevalleyStructure> chevalley_structure(const RootSystemSpec& spec) {
  static std::mutex mu;
  static std::map<RootSystemSpec, std::shared_ptr<const ChevalleyStructure>> memo;
  std::lock_guard lock(mu);
  if (auto it = memo.find(spec); it != memo.end()) return it->second;

  std::shared_ptr<const ChevalleyStructure> cs;
  const auto dir = cache_dir_from_env();
  if (dir) {
    try {
      if (auto loaded = load_structure(spec, *dir)) cs = std::make_shared<const ChevalleyStructure>(std::move(*loaded));
    } catch (const CacheError&) {
      // rebuilt below
    }
  }
  if (!cs) {
    cs = std::make_shared<const ChevalleyStructure>(build_structure_constants(RootSystem::build(spec)));
    if (dir) {
      try {
        save_structure(*cs, *dir);
      } catch (const std::exception&) {
        // a read-only cache directory is not fatal
      }
    }
  }
  memo.emplace(spec, cs);
  return cs;
}

}  // namespace chevalley
