#include "kwg/scenario.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "kwg/errors.hpp"

namespace kwg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Entry {
  std::string value;
  int line;
};

class Fields {
 public:
  void add(std::string key, std::string value, int line) {
    if (entries_.count(key)) {
      throw ParseError(line, key, fmt::format("duplicate key (first set on line {})", entries_.at(key).line));
    }
    entries_.emplace(std::move(key), Entry{std::move(value), line});
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }
  const Entry* get(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }
  int line_of(const std::string& key) const {
    const Entry* e = get(key);
    return e ? e->line : 0;
  }
  const Entry& require(const std::string& key) const {
    const Entry* e = get(key);
    if (!e) throw ParseError(0, key, "missing required key");
    return *e;
  }

 private:
  std::map<std::string, Entry> entries_;
};

double to_double(std::string_view text, int line, const std::string& field) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(line, field, fmt::format("expected a number, got '{}'", text));
  }
  return value;
}

std::uint64_t to_unsigned(std::string_view text, int line, const std::string& field) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(line, field, fmt::format("expected a nonnegative integer, got '{}'", text));
  }
  return value;
}

std::vector<double> to_vector(std::string_view text, int line, const std::string& field) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError(line, field, fmt::format("expected a bracketed list like [1, 2], got '{}'", text));
  }
  std::string_view inner = trim(text.substr(1, text.size() - 2));
  std::vector<double> out;
  while (!inner.empty()) {
    const auto comma = inner.find(',');
    out.push_back(to_double(inner.substr(0, comma), line, field));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ParseError(line, field, "empty vector");
  return out;
}

ParentDistribution to_parent(const Entry& e, const std::string& field) {
  try {
    return parse_parent(e.value);
  } catch (const ParameterDomainError& err) {
    throw ParseError(e.line, field, err.what());
  }
}

HeterogeneousSeries to_series(const Fields& f, const std::string& side, const ParentDistribution& parent) {
  const std::string alphas_key = side + ".alphas";
  const std::string betas_key = side + ".betas";
  const std::vector<std::string> outlier_keys = {side + ".n1",    side + ".n2",         side + ".alpha",
                                                 side + ".beta", side + ".alpha_star", side + ".beta_star"};
  const bool explicit_form = f.has(alphas_key) || f.has(betas_key);
  bool outlier_form = false;
  for (const auto& k : outlier_keys) outlier_form = outlier_form || f.has(k);

  if (explicit_form && outlier_form) {
    throw ParseError(f.line_of(alphas_key) ? f.line_of(alphas_key) : f.line_of(betas_key), side,
                     "mixes explicit vectors with multiple-outlier keys");
  }
  try {
    if (outlier_form) {
      std::vector<double> v;
      for (const auto& k : outlier_keys) {
        const Entry& e = f.require(k);
        v.push_back(k.ends_with("n1") || k.ends_with("n2") ? static_cast<double>(to_unsigned(e.value, e.line, k))
                                                           : to_double(e.value, e.line, k));
      }
      return MultipleOutlierSeries(parent, KwGShape(v[2], v[3]), static_cast<std::size_t>(v[0]),
                                   KwGShape(v[4], v[5]), static_cast<std::size_t>(v[1]))
          .expand();
    }
    const Entry& a = f.require(alphas_key);
    const Entry& b = f.require(betas_key);
    auto alphas = to_vector(a.value, a.line, alphas_key);
    auto betas = to_vector(b.value, b.line, betas_key);
    if (alphas.size() != betas.size()) {
      throw ParseError(b.line, betas_key,
                       fmt::format("has {} entries but {} has {}", betas.size(), alphas_key, alphas.size()));
    }
    return HeterogeneousSeries(parent, std::move(alphas), std::move(betas));
  } catch (const ParameterDomainError& err) {
    throw ParseError(f.line_of(outlier_form ? outlier_keys[2] : alphas_key), side, err.what());
  } catch (const DimensionError& err) {
    throw ParseError(f.line_of(outlier_form ? outlier_keys[0] : alphas_key), side, err.what());
  }
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k = {"name",      "parent",    "parent.u",  "parent.v",    "relation",
                                  "grid.kind", "grid.lo",   "grid.hi",   "grid.points", "seed",
                                  "output",    "expect",    "expect.st", "expect.hr",   "expect.lr"};
    for (const char* side : {"u", "v"}) {
      for (const char* f : {"alphas", "betas", "n1", "n2", "alpha", "beta", "alpha_star", "beta_star"}) {
        k.push_back(fmt::format("{}.{}", side, f));
      }
    }
    return k;
  }();
  return keys;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Fields f;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "", fmt::format("expected 'key = value', got '{}'", line));
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end()) {
      throw ParseError(line_no, key, "unknown key");
    }
    if (value.empty()) throw ParseError(line_no, key, "empty value");
    f.add(std::move(key), std::move(value), line_no);
  }

  const bool shared = f.has("parent");
  if (shared && (f.has("parent.u") || f.has("parent.v"))) {
    throw ParseError(f.line_of("parent"), "parent", "give either 'parent' or 'parent.u'/'parent.v', not both");
  }
  const ParentDistribution parent_u = to_parent(f.require(shared ? "parent" : "parent.u"), shared ? "parent" : "parent.u");
  const ParentDistribution parent_v = to_parent(f.require(shared ? "parent" : "parent.v"), shared ? "parent" : "parent.v");

  HeterogeneousSeries u = to_series(f, "u", parent_u);
  HeterogeneousSeries v = to_series(f, "v", parent_v);
  if (u.size() != v.size()) {
    throw ParseError(f.line_of("v.alphas") ? f.line_of("v.alphas") : f.line_of("v.n1"), "v",
                     fmt::format("U has {} components but V has {}", u.size(), v.size()));
  }

  Scenario s{f.has("name") ? f.get("name")->value : "scenario", std::move(u), std::move(v), {}, {}, 0, "", {}};

  const std::string relation_text = f.has("relation") ? f.get("relation")->value : "all";
  if (relation_text == "all") {
    s.relations = {Relation::usual_stochastic, Relation::hazard_rate, Relation::likelihood_ratio};
  } else {
    std::string_view rest = relation_text;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      try {
        const Relation r = parse_relation(trim(rest.substr(0, comma)));
        if (std::find(s.relations.begin(), s.relations.end(), r) == s.relations.end()) s.relations.push_back(r);
      } catch (const ParameterDomainError& err) {
        throw ParseError(f.line_of("relation"), "relation", err.what());
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }

  if (const Entry* e = f.get("grid.kind")) {
    try {
      s.grid.kind = parse_grid_kind(e->value);
    } catch (const ParameterDomainError& err) {
      throw ParseError(e->line, "grid.kind", err.what());
    }
  }
  if (const Entry* e = f.get("grid.lo")) s.grid.lo = to_double(e->value, e->line, "grid.lo");
  if (const Entry* e = f.get("grid.hi")) s.grid.hi = to_double(e->value, e->line, "grid.hi");
  if (const Entry* e = f.get("grid.points")) s.grid.points = to_unsigned(e->value, e->line, "grid.points");
  try {
    const Grid g = s.make_grid();
    g.require_inside(s.u.parent());
    g.require_inside(s.v.parent());
  } catch (const ParameterDomainError& err) {
    throw ParseError(f.line_of("grid.kind") ? f.line_of("grid.kind") : f.line_of("grid.lo"), "grid", err.what());
  }

  if (const Entry* e = f.get("seed")) s.seed = to_unsigned(e->value, e->line, "seed");
  if (const Entry* e = f.get("output")) s.output = e->value;

  auto parse_expect = [&](const std::string& key) {
    const Entry& e = *f.get(key);
    try {
      return parse_result(e.value);
    } catch (const ParameterDomainError& err) {
      throw ParseError(e.line, key, err.what());
    }
  };
  if (f.has("expect")) {
    const Result r = parse_expect("expect");
    for (Relation rel : s.relations) s.expect[rel] = r;
  }
  for (Relation rel : {Relation::usual_stochastic, Relation::hazard_rate, Relation::likelihood_ratio}) {
    const std::string key = fmt::format("expect.{}", to_string(rel));
    if (!f.has(key)) continue;
    if (std::find(s.relations.begin(), s.relations.end(), rel) == s.relations.end()) {
      throw ParseError(f.line_of(key), key, "expectation for a relation that is not checked");
    }
    s.expect[rel] = parse_expect(key);
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "", fmt::format("cannot open '{}'", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& s) {
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) { out += fmt::format("{} = {}\n", key, value); };
  auto vec = [](std::span<const double> v) { return fmt::format("[{}]", fmt::join(v, ", ")); };

  line("name", s.name);
  if (s.u.parent().name() == s.v.parent().name()) {
    line("parent", s.u.parent().name());
  } else {
    line("parent.u", s.u.parent().name());
    line("parent.v", s.v.parent().name());
  }
  line("u.alphas", vec(s.u.alphas()));
  line("u.betas", vec(s.u.betas()));
  line("v.alphas", vec(s.v.alphas()));
  line("v.betas", vec(s.v.betas()));
  std::vector<std::string> rels;
  for (Relation r : s.relations) rels.emplace_back(to_string(r));
  line("relation", fmt::format("{}", fmt::join(rels, ", ")));
  line("grid.kind", std::string(to_string(s.grid.kind)));
  line("grid.lo", fmt::format("{}", s.grid.lo));
  line("grid.hi", fmt::format("{}", s.grid.hi));
  line("grid.points", fmt::format("{}", s.grid.points));
  line("seed", fmt::format("{}", s.seed));
  if (!s.output.empty()) line("output", s.output);
  for (const auto& [rel, res] : s.expect) line(fmt::format("expect.{}", to_string(rel)), std::string(to_string(res)));
  return out;
}

}  // namespace kwg
