#include "qpu/prooflib.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "qpu/primes.hpp"

namespace qpu {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

std::vector<int64_t> parse_int_list(const std::string& text, const std::string& where) {
  std::vector<int64_t> out;
  size_t i = 0;
  while (i < text.size()) {
    size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    std::string piece = text.substr(i, j - i);
    try {
      size_t used = 0;
      int64_t v = std::stoll(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Malformed, where + ": bad integer list '" + text + "'");
    }
    i = j + 1;
  }
  if (out.empty()) throw Error(ErrorKind::Malformed, where + ": empty integer list");
  return out;
}

int64_t parse_int_tok(const std::string& tok, const std::string& where) {
  try {
    size_t used = 0;
    int64_t v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Malformed, where + ": bad integer '" + tok + "'");
  }
}

// "5*d^2" or "2*1225*d^2" or bare "d^2".
SubTerm parse_sub_term(const std::string& text, const std::string& where) {
  SubTerm term;
  std::vector<std::string> factors;
  size_t i = 0;
  while (i <= text.size()) {
    size_t j = text.find('*', i);
    if (j == std::string::npos) j = text.size();
    factors.push_back(text.substr(i, j - i));
    i = j + 1;
    if (j == text.size()) break;
  }
  if (factors.empty()) throw Error(ErrorKind::Malformed, where + ": empty subtrahend term");
  const std::string& last = factors.back();
  if (last.size() != 3 || last[1] != '^' || last[2] != '2' || last[0] < 'a' || last[0] > 'z')
    throw Error(ErrorKind::Malformed, where + ": subtrahend term must end in <var>^2");
  term.var = last[0];
  std::vector<int64_t> nums;
  for (size_t k = 0; k + 1 < factors.size(); ++k)
    nums.push_back(parse_int_tok(factors[k], where));
  if (nums.empty()) {
    term.lead = 1;
    term.square_part = 1;
  } else {
    term.lead = nums[0];
    term.square_part = 1;
    for (size_t k = 1; k < nums.size(); ++k) term.square_part *= nums[k];
  }
  if (term.lead <= 0 || term.square_part <= 0)
    throw Error(ErrorKind::Malformed, where + ": nonpositive subtrahend factor");
  return term;
}

DiagonalForm parse_diag(const std::string& text, const std::string& where) {
  auto parsed = parse_form(text);
  if (auto* d = std::get_if<DiagonalForm>(&parsed)) return *d;
  throw Error(ErrorKind::Malformed, where + ": expected a diagonal form");
}

std::string join_failures_key(const std::vector<int64_t>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string Guard::str() const {
  switch (kind) {
    case Kind::Even:
      return "even";
    case Kind::ModIn:
    case Kind::ModNotIn: {
      std::string s = "mod " + std::to_string(m) + (kind == Kind::ModIn ? " in " : " not ");
      s += join_failures_key(residues);
      return s;
    }
    case Kind::Coprime:
      return "coprime " + std::to_string(k);
    case Kind::Family:
      return "family " + family->str();
  }
  return "?";
}

std::vector<ProofScript> parse_scripts_text(const std::string& text,
                                            const std::string& origin) {
  std::vector<ProofScript> out;
  std::optional<ProofScript> cur;
  bool saw_rest = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto where = [&]() { return origin + ":" + std::to_string(lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "script") {
      if (cur) throw Error(ErrorKind::Malformed, where() + ": nested script block");
      if (toks.size() != 2) throw Error(ErrorKind::Malformed, where() + ": script needs a name");
      cur.emplace();
      cur->name = toks[1];
      saw_rest = false;
      continue;
    }
    if (!cur) throw Error(ErrorKind::Malformed, where() + ": directive outside script block");
    if (head == "end") {
      out.push_back(std::move(*cur));
      cur.reset();
    } else if (head == "target") {
      if (toks.size() != 2) throw Error(ErrorKind::Malformed, where() + ": target needs a form");
      cur->target = parse_diag(toks[1], where());
    } else if (head == "g") {
      if (toks.size() != 2) throw Error(ErrorKind::Malformed, where() + ": g needs a form");
      cur->g = parse_diag(toks[1], where());
    } else if (head == "b0") {
      if (toks.size() != 2) throw Error(ErrorKind::Malformed, where() + ": b0 needs a value");
      cur->b0 = parse_int_tok(toks[1], where());
    } else if (head == "exceptions") {
      if (toks.size() != 2) throw Error(ErrorKind::Malformed, where() + ": exceptions needs a list or 'none'");
      if (toks[1] != "none") cur->exceptions = parse_int_list(toks[1], where());
    } else if (head == "mod") {
      if (toks.size() != 2) throw Error(ErrorKind::Malformed, where() + ": mod needs a value");
      cur->mod = parse_int_tok(toks[1], where());
      if (cur->mod < 2) throw Error(ErrorKind::Malformed, where() + ": modulus too small");
    } else if (head == "sub") {
      // terms joined by '+'
      std::vector<std::string> parts;
      std::string cat;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i] == "+") {
          parts.push_back(cat);
          cat.clear();
        } else {
          cat += toks[i];
        }
      }
      parts.push_back(cat);
      for (const auto& p : parts) {
        if (p.empty()) throw Error(ErrorKind::Malformed, where() + ": empty subtrahend term");
        cur->terms.push_back(parse_sub_term(p, where()));
      }
      for (size_t i = 0; i < cur->terms.size(); ++i)
        for (size_t j = i + 1; j < cur->terms.size(); ++j)
          if (cur->terms[i].var == cur->terms[j].var)
            throw Error(ErrorKind::Malformed, where() + ": duplicate subtrahend variable");
    } else if (head == "derive") {
      // derive d in 1,3,5 [e in 0..6]
      DeriveSpec spec;
      size_t i = 1;
      while (i < toks.size()) {
        if (i + 2 >= toks.size() || toks[i].size() != 1 || toks[i + 1] != "in")
          throw Error(ErrorKind::Malformed, where() + ": expected '<var> in <range>'");
        char var = toks[i][0];
        const std::string& rng = toks[i + 2];
        std::vector<int64_t> values;
        size_t dots = rng.find("..");
        if (dots != std::string::npos) {
          int64_t lo = parse_int_tok(rng.substr(0, dots), where());
          int64_t hi = parse_int_tok(rng.substr(dots + 2), where());
          if (hi < lo) throw Error(ErrorKind::Malformed, where() + ": empty range");
          for (int64_t v = lo; v <= hi; ++v) values.push_back(v);
        } else {
          values = parse_int_list(rng, where());
        }
        spec.vars.push_back(var);
        spec.ranges.push_back(std::move(values));
        i += 3;
      }
      if (spec.vars.empty()) throw Error(ErrorKind::Malformed, where() + ": derive needs a variable");
      cur->derive = std::move(spec);
    } else if (head == "guard") {
      if (toks.size() < 2) throw Error(ErrorKind::Malformed, where() + ": empty guard");
      Guard g;
      if (toks[1] == "even") {
        g.kind = Guard::Kind::Even;
      } else if (toks[1] == "mod") {
        if (toks.size() != 5) throw Error(ErrorKind::Malformed, where() + ": guard mod <m> in|not <list>");
        g.m = parse_int_tok(toks[2], where());
        if (g.m < 2) throw Error(ErrorKind::Malformed, where() + ": guard modulus too small");
        if (toks[3] == "in") g.kind = Guard::Kind::ModIn;
        else if (toks[3] == "not") g.kind = Guard::Kind::ModNotIn;
        else throw Error(ErrorKind::Malformed, where() + ": guard mod needs 'in' or 'not'");
        g.residues = parse_int_list(toks[4], where());
        for (auto& r : g.residues) r = ((r % g.m) + g.m) % g.m;
      } else if (toks[1] == "coprime") {
        if (toks.size() != 3) throw Error(ErrorKind::Malformed, where() + ": guard coprime <k>");
        g.kind = Guard::Kind::Coprime;
        g.k = parse_int_tok(toks[2], where());
        if (g.k < 2) throw Error(ErrorKind::Malformed, where() + ": coprime guard needs k >= 2");
      } else if (toks[1] == "family") {
        if (toks.size() != 3) throw Error(ErrorKind::Malformed, where() + ": guard family <family>");
        g.kind = Guard::Kind::Family;
        g.family = parse_family(toks[2]);
      } else {
        throw Error(ErrorKind::Malformed, where() + ": unknown guard '" + toks[1] + "'");
      }
      cur->guards.push_back(std::move(g));
    } else if (head.size() == 1 && head[0] >= 'a' && head[0] <= 'z') {
      // explicit row: <var> <val> [<var> <val> ...] : <list>|rest
      ScriptRow row;
      std::vector<char> vars;
      size_t i = 0;
      while (i + 1 < toks.size() && toks[i] != ":") {
        if (toks[i].size() != 1) throw Error(ErrorKind::Malformed, where() + ": bad row variable");
        vars.push_back(toks[i][0]);
        row.assign.push_back(parse_int_tok(toks[i + 1], where()));
        i += 2;
      }
      if (i >= toks.size() || toks[i] != ":" || i + 1 != toks.size() - 1)
        throw Error(ErrorKind::Malformed, where() + ": row needs ': <residues>'");
      if (cur->terms.empty())
        throw Error(ErrorKind::Malformed, where() + ": rows must follow the sub directive");
      if (vars.size() != cur->terms.size())
        throw Error(ErrorKind::Malformed, where() + ": row variable count mismatch");
      for (size_t k = 0; k < vars.size(); ++k)
        if (vars[k] != cur->terms[k].var)
          throw Error(ErrorKind::Malformed, where() + ": row variables must match sub order");
      const std::string& rhs = toks.back();
      if (rhs == "rest") {
        if (saw_rest) throw Error(ErrorKind::Malformed, where() + ": multiple rest rows");
        row.rest = true;
        saw_rest = true;
      } else {
        if (saw_rest) throw Error(ErrorKind::Malformed, where() + ": rows after rest row");
        row.residues = parse_int_list(rhs, where());
      }
      cur->rows.push_back(std::move(row));
    } else {
      throw Error(ErrorKind::Malformed, where() + ": unknown directive '" + head + "'");
    }
  }
  if (cur) throw Error(ErrorKind::Malformed, origin + ": unterminated script block");
  return out;
}

std::vector<ProofScript> load_scripts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open script file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scripts_text(buf.str(), path);
}

std::vector<ProofScript> load_scripts_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".qps") files.push_back(entry.path().string());
  }
  if (ec) throw Error(ErrorKind::Io, "cannot list script directory " + dir);
  std::sort(files.begin(), files.end());
  std::vector<ProofScript> out;
  for (const auto& f : files) {
    auto part = load_scripts(f);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool class_intersects_family(int64_t c, int64_t mod, const ExcludedFamily& fam) {
  c = ((c % mod) + mod) % mod;
  std::set<int64_t> seen;
  int64_t y = 1 % mod;  // base^s mod `mod`
  while (seen.insert(y).second) {
    for (int64_t r0 : fam.residues) {
      int64_t step = (int64_t)(((i128)y * (fam.m % mod)) % mod);
      int64_t g = gcd64(mod, step == 0 ? mod : step);
      int64_t start = (int64_t)(((i128)y * (r0 % mod)) % mod);
      if (((c - start) % g + g) % g == 0) return true;
    }
    y = (int64_t)(((i128)y * (fam.c % mod)) % mod);
  }
  return false;
}

bool class_safe(int64_t c, int64_t mod, const std::vector<Guard>& guards) {
  c = ((c % mod) + mod) % mod;
  for (const auto& g : guards) {
    switch (g.kind) {
      case Guard::Kind::Even: {
        if (mod % 2 != 0 || c % 2 != 0) return false;
        break;
      }
      case Guard::Kind::ModIn:
      case Guard::Kind::ModNotIn: {
        int64_t gg = gcd64(mod, g.m);
        std::set<int64_t> rs(g.residues.begin(), g.residues.end());
        for (int64_t x = c % gg; x < g.m; x += gg) {
          bool in = rs.count(x) != 0;
          if (g.kind == Guard::Kind::ModIn && !in) return false;
          if (g.kind == Guard::Kind::ModNotIn && in) return false;
        }
        break;
      }
      case Guard::Kind::Coprime: {
        int64_t k = g.k;
        for (int64_t q = 2; q * q <= k; ++q) {
          if (k % q != 0) continue;
          while (k % q == 0) k /= q;
          if (mod % q != 0 || c % q == 0) return false;
        }
        if (k > 1 && (mod % k != 0 || c % k == 0)) return false;
        break;
      }
      case Guard::Kind::Family: {
        if (class_intersects_family(c, mod, *g.family)) return false;
        break;
      }
    }
  }
  return true;
}

const RepresentationSieve& SieveCache::get(const DiagonalForm& f, int64_t bound,
                                           int threads) {
  auto it = store_.find(f.str());
  if (it == store_.end() || it->second.bound() < bound) {
    RepresentationSieve s = build_sieve(f, bound, threads);
    if (it == store_.end())
      it = store_.emplace(f.str(), std::move(s)).first;
    else
      it->second = std::move(s);
  }
  return it->second;
}

ScriptReport verify_proof_script(const ProofScript& s, int64_t bound,
                                 SieveCache& cache, int threads) {
  ScriptReport report;
  report.name = s.name;
  auto fail = [&](const std::string& msg) {
    report.ok = false;
    if (report.failures.size() < 64) report.failures.push_back(msg);
  };

  // Structure: subtrahend leads, together with g, must rebuild the target,
  // and every square part must be a perfect square.
  {
    std::vector<int64_t> combined = s.g.coeffs();
    for (const auto& t : s.terms) {
      combined.push_back(t.lead);
      int64_t r = isqrt(t.square_part);
      if (r * r != t.square_part)
        fail("subtrahend factor " + std::to_string(t.square_part) + " is not a square");
    }
    std::sort(combined.begin(), combined.end());
    if (combined != s.target.coeffs())
      fail("g plus subtrahend leads do not rebuild the target form");
    if (s.terms.empty()) fail("script has no subtrahend");
    if (s.b0 < 2) fail("script has no lower bound");
    if (bound < s.b0) fail("verification bound below b0");
  }

  const int64_t M = s.mod;
  std::vector<int64_t> units;
  for (int64_t r = 1; r < M; ++r)
    if (gcd64(r, M) == 1) units.push_back(r);

  auto subtrahend = [&](const std::vector<int64_t>& assign) {
    int64_t total = 0;
    for (size_t i = 0; i < s.terms.size(); ++i)
      total += s.terms[i].lead * s.terms[i].square_part * assign[i] * assign[i];
    return total;
  };

  // Resolve the table.
  if (!s.rows.empty() && s.derive)
    fail("script has both explicit rows and a derive directive");
  if (!s.rows.empty()) {
    std::set<int64_t> covered;
    for (const auto& row : s.rows) {
      std::vector<int64_t> rs;
      if (row.rest) {
        for (int64_t u : units)
          if (!covered.count(u)) rs.push_back(u);
      } else {
        rs = row.residues;
      }
      for (int64_t raw : rs) {
        int64_t r = ((raw % M) + M) % M;
        if (gcd64(r, M) != 1) {
          fail("row residue " + std::to_string(raw) + " is not a unit mod " + std::to_string(M));
          continue;
        }
        if (!covered.insert(r).second) {
          fail("residue " + std::to_string(r) + " covered twice");
          continue;
        }
        report.table[r] = row.assign;
      }
    }
    for (int64_t u : units)
      if (!covered.count(u)) fail("residue " + std::to_string(u) + " not covered");
  } else if (s.derive) {
    const auto& spec = *s.derive;
    if (spec.vars.size() != s.terms.size()) {
      fail("derive variable count mismatch");
    } else {
      bool order_ok = true;
      for (size_t i = 0; i < spec.vars.size(); ++i)
        if (spec.vars[i] != s.terms[i].var) order_ok = false;
      if (!order_ok) fail("derive variables must match sub order");
    }
    if (report.ok) {
      for (int64_t r : units) {
        std::vector<size_t> idx(spec.ranges.size(), 0);
        bool found = false;
        while (true) {
          std::vector<int64_t> assign(spec.ranges.size());
          for (size_t i = 0; i < spec.ranges.size(); ++i)
            assign[i] = spec.ranges[i][idx[i]];
          int64_t c = ((r - subtrahend(assign)) % M + M) % M;
          if (class_safe(c, M, s.guards)) {
            report.table[r] = assign;
            found = true;
            break;
          }
          // advance odometer, last variable fastest
          size_t i = idx.size();
          while (i > 0) {
            --i;
            if (++idx[i] < spec.ranges[i].size()) break;
            idx[i] = 0;
            if (i == 0) { i = idx.size() + 1; break; }
          }
          if (i > idx.size()) break;
        }
        if (!found)
          fail("no safe assignment for residue " + std::to_string(r) + " mod " + std::to_string(M));
      }
    }
  } else {
    fail("script has neither rows nor derive");
  }

  // Class-level safety of every table entry.
  for (const auto& [r, assign] : report.table) {
    int64_t c = ((r - subtrahend(assign)) % M + M) % M;
    if (!class_safe(c, M, s.guards))
      fail("residue " + std::to_string(r) + " -> class " + std::to_string(c) +
           " violates a guard (assignment " + join_failures_key(assign) + ")");
  }

  // Large primes: subtract and look the difference up in the g sieve.
  if (report.ok) {
    const RepresentationSieve& sg = cache.get(s.g, bound, threads);
    for (int64_t p : primes_upto(bound)) {
      if (p < s.b0) continue;
      int64_t r = p % M;
      auto it = report.table.find(r);
      if (it == report.table.end()) {
        fail("prime " + std::to_string(p) + " has no table row");
        continue;
      }
      int64_t n = p - subtrahend(it->second);
      if (n < 0) {
        fail("prime " + std::to_string(p) + " gives negative difference");
        continue;
      }
      if (!sg.test(n)) {
        fail("prime " + std::to_string(p) + ": difference " + std::to_string(n) +
             " not represented by " + s.g.str());
        if (report.failures.size() >= 64) break;
      }
      ++report.primes_checked;
    }
  }

  // Small primes: direct check against the target, honoring exceptions.
  if (s.b0 >= 2) {
    const RepresentationSieve& st = cache.get(s.target, s.b0, threads);
    std::set<int64_t> exc(s.exceptions.begin(), s.exceptions.end());
    for (int64_t p : primes_upto(s.b0 - 1)) {
      bool represented = st.test(p);
      bool listed = exc.count(p) != 0;
      if (represented && listed)
        fail("listed exception " + std::to_string(p) + " is represented by the target");
      if (!represented && !listed)
        fail("prime " + std::to_string(p) + " below b0 missed by the target");
      ++report.small_primes_checked;
    }
    for (int64_t e : s.exceptions)
      if (e >= s.b0) fail("exception " + std::to_string(e) + " not below b0");
  }

  return report;
}

std::map<std::string, GenusRecord> load_genus_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open genus table " + path);
  std::map<std::string, GenusRecord> out;
  std::optional<GenusRecord> cur;
  int declared = 1;
  std::string line;
  int lineno = 0;
  auto where = [&]() { return path + ":" + std::to_string(lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "genus") {
      if (cur) throw Error(ErrorKind::Malformed, where() + ": nested genus block");
      if (toks.size() != 2) throw Error(ErrorKind::Malformed, where() + ": genus needs a form");
      cur.emplace();
      cur->genus.rep = parse_diag(toks[1], where());
      declared = 1;
      continue;
    }
    if (!cur) throw Error(ErrorKind::Malformed, where() + ": directive outside genus block");
    if (head == "end") {
      cur->declared_class = declared;
      if (cur->genus.class_number() != declared)
        throw Error(ErrorKind::Data, where() + ": class count does not match mate count for " +
                                         cur->genus.rep.str());
      GramForm rep(cur->genus.rep);
      for (const auto& mate : cur->genus.mates) {
        if (mate.dim() != rep.dim())
          throw Error(ErrorKind::Data, where() + ": mate dimension mismatch");
        if (mate.determinant() != rep.determinant())
          throw Error(ErrorKind::Data, where() + ": mate determinant mismatch for " +
                                           cur->genus.rep.str());
      }
      out.emplace(cur->genus.rep.str(), std::move(*cur));
      cur.reset();
    } else if (head == "class") {
      if (toks.size() != 2) throw Error(ErrorKind::Malformed, where() + ": class needs a number");
      declared = (int)parse_int_tok(toks[1], where());
    } else if (head == "mate") {
      if (toks.size() != 2) throw Error(ErrorKind::Malformed, where() + ": mate needs a form");
      auto parsed = parse_form(toks[1]);
      if (auto* d = std::get_if<DiagonalForm>(&parsed))
        cur->genus.mates.emplace_back(*d);
      else
        cur->genus.mates.push_back(std::get<GramForm>(parsed));
    } else if (head == "family") {
      if (toks.size() != 2) throw Error(ErrorKind::Malformed, where() + ": family needs a pattern");
      cur->families.push_back(parse_family(toks[1]));
    } else if (head == "constraint") {
      if (toks.size() != 2 || toks[1] != "even")
        throw Error(ErrorKind::Malformed, where() + ": unknown constraint");
      cur->constraint = ValueConstraint::Even;
    } else if (head == "inferred") {
      cur->inferred = true;
    } else {
      throw Error(ErrorKind::Malformed, where() + ": unknown directive '" + head + "'");
    }
  }
  if (cur) throw Error(ErrorKind::Malformed, path + ": unterminated genus block");
  return out;
}

std::vector<MateTransfer> load_mate_transfers(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open transfer table " + path);
  std::vector<MateTransfer> out;
  std::string line;
  int lineno = 0;
  auto where = [&]() { return path + ":" + std::to_string(lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] != "transfer" || toks.size() != 9 || toks[1] != "g" || toks[3] != "mate" ||
        toks[5] != "mod" || toks[7] != "in")
      throw Error(ErrorKind::Malformed, where() + ": expected 'transfer g <form> mate <form> mod <m> in <list>'");
    MateTransfer t;
    t.g = parse_diag(toks[2], where());
    auto parsed = parse_form(toks[4]);
    if (auto* d = std::get_if<DiagonalForm>(&parsed))
      t.mate = GramForm(*d);
    else
      t.mate = std::get<GramForm>(parsed);
    t.mod = parse_int_tok(toks[6], where());
    if (t.mod < 2) throw Error(ErrorKind::Malformed, where() + ": modulus too small");
    t.residues = parse_int_list(toks[8], where());
    if (t.mate.determinant() != GramForm(t.g).determinant())
      throw Error(ErrorKind::Data, where() + ": transfer determinant mismatch");
    out.push_back(std::move(t));
  }
  return out;
}

TransferReport verify_mate_transfer(const MateTransfer& t, int64_t bound) {
  return verify_transfer(t.mate, GramForm(t.g), t.mod, t.residues, bound);
}

}  // namespace qpu
