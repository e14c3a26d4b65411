#include "cogrowth/spec_format.hpp"

#include <fstream>
#include <sstream>

#include "cogrowth/errors.hpp"

namespace cogrowth {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError("spec: invalid " + what + " '" + s + "'");
  }
}

EngineKind parse_kind(const std::string& s) {
  if (s == "finite_table") return EngineKind::finite_table;
  if (s == "rewriting") return EngineKind::rewriting;
  if (s == "free") return EngineKind::free_semigroup;
  if (s == "free_commutative") return EngineKind::free_commutative;
  if (s == "bicyclic") return EngineKind::bicyclic;
  if (s == "integer_lattice") return EngineKind::integer_lattice;
  throw UsageError("spec: unknown kind '" + s + "'");
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw UsageError("spec: expected true or false, got '" + s + "'");
}

std::vector<Int> parse_tuple(std::string s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw UsageError("spec: coordinate tuple must look like (x1,...,xd), got '" + s + "'");
  std::vector<Int> out;
  std::string body = s.substr(1, s.size() - 2);
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string item = trim(body.substr(pos, comma - pos));
    std::string digits = (!item.empty() && item[0] == '+') ? item.substr(1) : item;
    try {
      if (digits.empty()) throw std::invalid_argument(digits);
      out.emplace_back(digits);
    } catch (const std::exception&) {
      throw UsageError("spec: invalid integer '" + item + "' in tuple");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

/// Detects a two-sided identity in a 1-based table.
bool table_has_identity(const std::vector<std::vector<std::size_t>>& rows) {
  const std::size_t m = rows.size();
  for (std::size_t e = 0; e < m; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x)
      ok = rows[e][x] == x + 1 && rows[x][e] == x + 1;
    if (ok) return true;
  }
  return false;
}

}  // namespace

SemigroupSpec parse_spec(const std::string& text) {
  SemigroupSpec spec;
  bool have_kind = false, have_monoid = false, monoid_line = false;
  bool have_order = false, have_dim = false, have_rank = false, have_gens = false;

  std::istringstream in(text);
  for (std::string raw; std::getline(in, raw);) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("spec: expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "kind") {
      if (have_kind) throw UsageError("spec: duplicate kind line");
      spec.kind = parse_kind(value);
      have_kind = true;
      continue;
    }
    if (!have_kind) throw UsageError("spec: the first line must set kind");

    if (key == "monoid") {
      if (have_monoid) throw UsageError("spec: duplicate monoid line");
      spec.monoid = parse_bool(value);
      have_monoid = monoid_line = true;
    } else if (key == "order" && spec.kind == EngineKind::finite_table) {
      if (have_order) throw UsageError("spec: duplicate order line");
      spec.order = parse_size(value, "order");
      if (spec.order == 0) throw UsageError("spec: order must be positive");
      have_order = true;
    } else if (key == "row" && spec.kind == EngineKind::finite_table) {
      if (!have_order) throw UsageError("spec: row before order");
      std::vector<std::size_t> row;
      for (const std::string& tok : split_ws(value))
        row.push_back(parse_size(tok, "table entry"));
      spec.rows.push_back(std::move(row));
    } else if (key == "alphabet" && spec.kind == EngineKind::rewriting) {
      if (!spec.alphabet.empty()) throw UsageError("spec: duplicate alphabet line");
      spec.alphabet = split_ws(value);
      if (spec.alphabet.empty()) throw UsageError("spec: empty alphabet");
    } else if (key == "rule" && spec.kind == EngineKind::rewriting) {
      if (spec.alphabet.empty()) throw UsageError("spec: rule before alphabet");
      std::size_t arrow = value.find("->");
      if (arrow == std::string::npos)
        throw UsageError("spec: rule must look like 'lhs -> rhs', got '" + value + "'");
      std::string lhs = trim(value.substr(0, arrow));
      std::string rhs = trim(value.substr(arrow + 2));
      if (lhs.empty() || rhs.empty())
        throw UsageError("spec: rule must name both sides ('1' for the empty word)");
      if (lhs == "1") lhs.clear();
      if (rhs == "1") rhs.clear();
      spec.rules.push_back({std::move(lhs), std::move(rhs)});
    } else if (key == "dim" && spec.kind == EngineKind::integer_lattice) {
      if (have_dim) throw UsageError("spec: duplicate dim line");
      spec.dim = parse_size(value, "dim");
      if (spec.dim == 0) throw UsageError("spec: dim must be positive");
      have_dim = true;
    } else if (key == "gen" && spec.kind == EngineKind::integer_lattice) {
      if (!have_dim) throw UsageError("spec: gen before dim");
      std::size_t sp = value.find(' ');
      if (sp == std::string::npos)
        throw UsageError("spec: gen must look like 'name (x1,...,xd)'");
      LatticeGenerator g;
      g.name = trim(value.substr(0, sp));
      g.coords = parse_tuple(value.substr(sp + 1));
      if (g.name.empty()) throw UsageError("spec: gen with empty name");
      spec.lattice_gens.push_back(std::move(g));
    } else if (key == "rank" && (spec.kind == EngineKind::free_semigroup ||
                                 spec.kind == EngineKind::free_commutative)) {
      if (have_rank) throw UsageError("spec: duplicate rank line");
      spec.rank = parse_size(value, "rank");
      if (spec.rank == 0) throw UsageError("spec: rank must be positive");
      have_rank = true;
    } else if (key == "gens") {
      if (have_gens) throw UsageError("spec: duplicate gens line");
      for (const std::string& tok : split_ws(value)) {
        std::size_t colon = tok.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
          throw UsageError("spec: gens entries must look like sym:word, got '" + tok +
                           "'");
        spec.gens.push_back({tok.substr(0, colon), tok.substr(colon + 1)});
      }
      if (spec.gens.empty()) throw UsageError("spec: empty gens line");
      have_gens = true;
    } else {
      throw UsageError("spec: unexpected line '" + line + "' for kind " +
                       to_string(spec.kind));
    }
  }
  if (!have_kind) throw UsageError("spec: missing kind line");

  // Kind-specific completeness.
  switch (spec.kind) {
    case EngineKind::finite_table:
      if (!have_order) throw UsageError("spec: finite_table needs an order line");
      if (spec.rows.size() != spec.order)
        throw UsageError("spec: expected " + std::to_string(spec.order) +
                         " row lines, got " + std::to_string(spec.rows.size()));
      for (const auto& row : spec.rows) {
        if (row.size() != spec.order)
          throw UsageError("spec: every row needs " + std::to_string(spec.order) +
                           " entries");
        for (std::size_t v : row)
          if (v < 1 || v > spec.order)
            throw UsageError("spec: table entry out of range");
      }
      break;
    case EngineKind::rewriting:
      if (spec.alphabet.empty()) throw UsageError("spec: rewriting needs an alphabet");
      break;
    case EngineKind::integer_lattice:
      if (!have_dim) throw UsageError("spec: integer_lattice needs a dim line");
      break;
    case EngineKind::free_semigroup:
    case EngineKind::free_commutative:
      if (!have_rank) throw UsageError("spec: this kind needs a rank line");
      break;
    case EngineKind::bicyclic:
      break;
  }

  // Resolve the monoid flag; explicit contradictions are errors.
  switch (spec.kind) {
    case EngineKind::bicyclic:
    case EngineKind::integer_lattice:
      if (monoid_line && !spec.monoid)
        throw UsageError("spec: " + to_string(spec.kind) + " is always a monoid");
      spec.monoid = true;
      break;
    case EngineKind::finite_table: {
      const bool detected = table_has_identity(spec.rows);
      if (monoid_line && spec.monoid != detected)
        throw UsageError(std::string("spec: monoid = ") +
                         (spec.monoid ? "true" : "false") +
                         " contradicts the table, which " +
                         (detected ? "has" : "has no") + " identity");
      spec.monoid = detected;
      break;
    }
    case EngineKind::free_semigroup:
      if (!monoid_line) spec.monoid = false;
      break;
    case EngineKind::free_commutative:
      if (!monoid_line) spec.monoid = true;
      break;
    case EngineKind::rewriting:
      if (!monoid_line) spec.monoid = false;
      for (const RewriteRule& r : spec.rules)
        if (r.rhs.empty() && !spec.monoid)
          throw UsageError("spec: rule '" + r.lhs +
                           " -> 1' needs monoid = true (the empty word is the identity)");
      break;
  }
  return spec;
}

SemigroupSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string serialize_spec(const SemigroupSpec& spec) {
  std::ostringstream out;
  out << "kind = ";
  switch (spec.kind) {
    case EngineKind::finite_table: out << "finite_table"; break;
    case EngineKind::rewriting: out << "rewriting"; break;
    case EngineKind::free_semigroup: out << "free"; break;
    case EngineKind::free_commutative: out << "free_commutative"; break;
    case EngineKind::bicyclic: out << "bicyclic"; break;
    case EngineKind::integer_lattice: out << "integer_lattice"; break;
  }
  out << "\nmonoid = " << (spec.monoid ? "true" : "false") << "\n";
  switch (spec.kind) {
    case EngineKind::finite_table:
      out << "order = " << spec.order << "\n";
      for (const auto& row : spec.rows) {
        out << "row =";
        for (std::size_t v : row) out << " " << v;
        out << "\n";
      }
      break;
    case EngineKind::rewriting:
      out << "alphabet =";
      for (const std::string& a : spec.alphabet) out << " " << a;
      out << "\n";
      for (const RewriteRule& r : spec.rules)
        out << "rule = " << (r.lhs.empty() ? "1" : r.lhs) << " -> "
            << (r.rhs.empty() ? "1" : r.rhs) << "\n";
      break;
    case EngineKind::integer_lattice:
      out << "dim = " << spec.dim << "\n";
      for (const LatticeGenerator& g : spec.lattice_gens) {
        out << "gen = " << g.name << " (";
        for (std::size_t i = 0; i < g.coords.size(); ++i) {
          if (i) out << ",";
          out << g.coords[i].get_str();
        }
        out << ")\n";
      }
      break;
    case EngineKind::free_semigroup:
    case EngineKind::free_commutative:
      out << "rank = " << spec.rank << "\n";
      break;
    case EngineKind::bicyclic:
      break;
  }
  if (!spec.gens.empty()) {
    out << "gens =";
    for (const auto& g : spec.gens) out << " " << g.symbol << ":" << g.word;
    out << "\n";
  }
  return out.str();
}

BuiltSemigroup build_semigroup(const SemigroupSpec& spec, std::size_t cap,
                               bool opposite) {
  Family fam;
  switch (spec.kind) {
    case EngineKind::finite_table:
      fam = make_finite_table(spec.rows, cap);
      break;
    case EngineKind::rewriting: {
      RewriteSystem rs(spec.alphabet, spec.rules);
      auto E = std::make_shared<RewritingEngine>(std::move(rs), spec.monoid, cap);
      GeneratorChoice X;
      for (std::size_t i = 0; i < spec.alphabet.size(); ++i) {
        X.symbols.push_back(spec.alphabet[i]);
        X.targets.push_back(E->intern_word(spec.alphabet[i]));
        X.definitions.push_back({static_cast<GenIndex>(i)});
      }
      fam = {E, X};
      break;
    }
    case EngineKind::free_semigroup:
      fam = make_free(spec.rank, spec.monoid, cap);
      break;
    case EngineKind::free_commutative:
      fam = make_free_commutative(spec.rank, spec.monoid, cap);
      break;
    case EngineKind::bicyclic:
      fam = make_bicyclic_family(cap);
      break;
    case EngineKind::integer_lattice:
      fam = make_integer_lattice(spec.dim, spec.lattice_gens, cap);
      break;
  }

  if (!spec.gens.empty()) {
    GeneratorChoice chosen;
    for (const auto& g : spec.gens) {
      for (const std::string& seen : chosen.symbols)
        if (seen == g.symbol)
          throw UsageError("spec: generator symbol '" + g.symbol + "' repeats");
      Word w = parse_word(fam.choice, g.word);
      chosen.symbols.push_back(g.symbol);
      chosen.targets.push_back(eval_word(*fam.engine, fam.choice, w));
      chosen.definitions.push_back(std::move(w));
    }
    fam.choice = std::move(chosen);
  }

  if (opposite) fam.engine = make_opposite(std::move(fam.engine));
  return {std::move(fam.engine), std::move(fam.choice), spec};
}

SemigroupSpec free_spec(std::size_t rank, bool monoid) {
  SemigroupSpec s;
  s.kind = EngineKind::free_semigroup;
  s.monoid = monoid;
  s.rank = rank;
  return s;
}

SemigroupSpec free_commutative_spec(std::size_t rank, bool monoid) {
  SemigroupSpec s;
  s.kind = EngineKind::free_commutative;
  s.monoid = monoid;
  s.rank = rank;
  return s;
}

SemigroupSpec bicyclic_spec() {
  SemigroupSpec s;
  s.kind = EngineKind::bicyclic;
  s.monoid = true;
  return s;
}

SemigroupSpec lattice_spec(std::size_t dim, std::vector<LatticeGenerator> gens) {
  SemigroupSpec s;
  s.kind = EngineKind::integer_lattice;
  s.monoid = true;
  s.dim = dim;
  s.lattice_gens = std::move(gens);
  return s;
}

SemigroupSpec table_spec(std::vector<std::vector<std::size_t>> rows) {
  SemigroupSpec s;
  s.kind = EngineKind::finite_table;
  s.monoid = table_has_identity(rows);
  s.order = rows.size();
  s.rows = std::move(rows);
  return s;
}

}  // namespace cogrowth
