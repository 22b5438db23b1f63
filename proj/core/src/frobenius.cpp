#include "necklace/frobenius.hpp"

#include <algorithm>
#include <sstream>

#include "necklace/sign.hpp"

namespace necklace {

namespace {

using Vec = std::map<int, Rat>;
using Ten2 = std::map<std::pair<int, int>, Rat>;
using Ten3 = std::map<std::tuple<int, int, int>, Rat>;

template <class M>
void acc(M& m, const typename M::key_type& k, const Rat& v) {
  if (v.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end())
    m.emplace(k, v);
  else {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

}  // namespace

int Frobenius::basis_index(const std::string& n) const {
  for (size_t i = 0; i < basis_names.size(); ++i)
    if (basis_names[i] == n) return static_cast<int>(i);
  return -1;
}

std::map<int, Rat> Frobenius::mul(int x, int y) const {
  std::map<int, Rat> out;
  for (const auto& [k, c] : product[x][y]) acc(out, k, c);
  return out;
}

Rat Frobenius::pairing(int x, int y) const {
  Rat r;
  for (const auto& [k, c] : product[x][y]) r += c * counit[k];
  return r;
}

// ---------------------------------------------------------------------------
// Loader

Frobenius load_frobenius(const std::string& document) {
  Frobenius F;
  F.m = -1;
  enum class Section { None, Basis, Counit, D, Product, Coproduct };
  Section sec = Section::None;
  std::string unit_name;
  // Deferred table lines: resolved after the basis is complete.
  std::vector<std::pair<Section, std::string>> table_lines;

  std::istringstream is(document);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (auto h = line.find('#'); h != std::string::npos) line = strip(line.substr(0, h));
    if (line.empty()) continue;
    auto tk = tokens(line);
    const std::string& head = tk[0];
    auto fail = [&](const std::string& msg) -> LoadError {
      return LoadError(LoadError::Kind::Parse,
                       "line " + std::to_string(lineno) + ": " + msg + ": '" + line + "'");
    };

    if (head == "name" && tk.size() == 2) {
      F.name = tk[1];
      sec = Section::None;
    } else if (head == "frobenius_degree" && tk.size() == 2) {
      F.m = std::stoi(tk[1]);
      sec = Section::None;
    } else if (head == "simply_connected" && tk.size() == 2) {
      if (tk[1] != "true" && tk[1] != "false") throw fail("expected true/false");
      F.simply_connected = tk[1] == "true";
      sec = Section::None;
    } else if (head == "unit" && tk.size() == 2) {
      unit_name = tk[1];
      sec = Section::None;
    } else if (head == "basis" && tk.size() == 1) {
      sec = Section::Basis;
    } else if (head == "counit" && tk.size() == 1) {
      sec = Section::Counit;
    } else if (head == "d" && tk.size() == 1) {
      sec = Section::D;
    } else if (head == "product" && tk.size() == 1) {
      sec = Section::Product;
    } else if (head == "coproduct" && tk.size() == 1) {
      sec = Section::Coproduct;
    } else if (sec == Section::Basis) {
      if (tk.size() != 2) throw fail("basis entry must be 'name degree'");
      F.basis_names.push_back(tk[0]);
      int deg = 0;
      try {
        deg = std::stoi(tk[1]);
      } catch (...) {
        throw fail("bad degree");
      }
      F.degree.push_back(deg);
    } else if (sec != Section::None) {
      table_lines.emplace_back(sec, line);
    } else {
      throw fail("unrecognized directive");
    }
  }

  if (F.basis_names.empty())
    throw LoadError(LoadError::Kind::MissingField, "no basis section");
  if (F.m < 0)
    throw LoadError(LoadError::Kind::MissingField, "frobenius_degree missing");
  if (unit_name.empty())
    throw LoadError(LoadError::Kind::MissingField, "unit missing");
  F.unit = F.basis_index(unit_name);
  if (F.unit < 0)
    throw LoadError(LoadError::Kind::Parse, "unit names unknown element '" + unit_name + "'");

  const size_t n = F.dim();
  F.counit.assign(n, Rat());
  F.d.assign(n, {});
  F.product.assign(n, std::vector<std::vector<std::pair<int, Rat>>>(n));
  F.coproduct.assign(n, {});

  bool saw_counit = false;
  auto idx = [&](const std::string& nm, const std::string& line) {
    int i = F.basis_index(nm);
    if (i < 0)
      throw LoadError(LoadError::Kind::Parse, "unknown basis element '" + nm + "' in '" + line + "'");
    return i;
  };

  for (const auto& [s, line] : table_lines) {
    auto tk = tokens(line);
    auto fail = [&](const std::string& msg) -> LoadError {
      return LoadError(LoadError::Kind::Parse, msg + ": '" + line + "'");
    };
    auto degree_err = [&](const std::string& what) -> LoadError {
      return LoadError(LoadError::Kind::Degree, what + ": '" + line + "'");
    };
    switch (s) {
      case Section::Counit: {
        // x -> c
        if (tk.size() != 3 || tk[1] != "->") throw fail("counit entry must be 'x -> c'");
        int i = idx(tk[0], line);
        Rat c = Rat::parse(tk[2]);
        if (!c.is_zero() && F.degree[i] != 0) throw degree_err("counit supported off degree 0");
        F.counit[i] = c;
        saw_counit = true;
        break;
      }
      case Section::D: {
        // x -> c y
        if (tk.size() != 4 || tk[1] != "->") throw fail("d entry must be 'x -> c y'");
        int i = idx(tk[0], line), j = idx(tk[3], line);
        Rat c = Rat::parse(tk[2]);
        if (!c.is_zero() && F.degree[j] != F.degree[i] - 1)
          throw degree_err("differential is not of degree -1");
        if (!c.is_zero()) F.d[i].emplace_back(j, c);
        break;
      }
      case Section::Product: {
        // x y -> c z
        if (tk.size() != 5 || tk[2] != "->") throw fail("product entry must be 'x y -> c z'");
        int i = idx(tk[0], line), j = idx(tk[1], line), k = idx(tk[4], line);
        Rat c = Rat::parse(tk[3]);
        if (!c.is_zero() && F.degree[k] != F.degree[i] + F.degree[j] - F.m)
          throw degree_err("product is not of degree -m");
        if (!c.is_zero()) F.product[i][j].emplace_back(k, c);
        break;
      }
      case Section::Coproduct: {
        // x -> c (y ⊗ z)   — also accepts the ascii form (y (x) z)
        if (tk.size() < 3 || tk[1] != "->") throw fail("coproduct entry must be 'x -> c (y ⊗ z)'");
        std::string rest;
        for (size_t t = 2; t < tk.size(); ++t) rest += tk[t] + " ";
        size_t lp = rest.find('('), rp = rest.rfind(')');
        if (lp == std::string::npos || rp == std::string::npos || rp < lp)
          throw fail("missing tensor parentheses");
        Rat c = Rat::parse(strip(rest.substr(0, lp)));
        std::string inner = rest.substr(lp + 1, rp - lp - 1);
        for (const std::string& t : {std::string("\xE2\x8A\x97"), std::string("(x)")}) {
          if (auto p = inner.find(t); p != std::string::npos) inner.replace(p, t.size(), " ");
        }
        auto pr = tokens(inner);
        if (pr.size() != 2) throw fail("tensor must have two factors");
        int i = idx(tk[0], line), j = idx(pr[0], line), k = idx(pr[1], line);
        if (!c.is_zero() && F.degree[j] + F.degree[k] != F.degree[i])
          throw degree_err("coproduct is not of degree 0");
        if (!c.is_zero()) F.coproduct[i].emplace_back(j, k, c);
        break;
      }
      default:
        throw fail("entry outside any section");
    }
  }

  if (!saw_counit) throw LoadError(LoadError::Kind::MissingField, "counit missing");
  for (int g : F.degree)
    if (g < 0) throw LoadError(LoadError::Kind::Degree, "negative basis degree");
  return F;
}

// ---------------------------------------------------------------------------
// Validator

namespace {

Vec apply_d(const Frobenius& F, int i) {
  Vec v;
  for (const auto& [j, c] : F.d[i]) acc(v, j, c);
  return v;
}

std::string bname(const Frobenius& F, int i) { return F.basis_names[i]; }

std::string witness2(const Frobenius& F, int x, int y) {
  return "(" + bname(F, x) + ", " + bname(F, y) + ")";
}

std::string witness3(const Frobenius& F, int x, int y, int z) {
  return "(" + bname(F, x) + ", " + bname(F, y) + ", " + bname(F, z) + ")";
}

}  // namespace

Report validate_frobenius(const Frobenius& F) {
  Report rep;
  rep.title = "frobenius axioms: " + F.name;
  const int n = static_cast<int>(F.dim());

  // Structural degree checks.
  {
    bool ok = F.m >= 2;
    rep.add("frobenius_degree >= 2", ok, ok ? "" : "m = " + std::to_string(F.m));
  }
  {
    bool ok = F.unit >= 0 && F.degree[F.unit] == 0;
    rep.add("unit element has degree 0", ok, ok ? "" : bname(F, F.unit));
  }
  {
    bool ok = true;
    std::string w;
    if (F.simply_connected) {
      for (int i = 0; i < n && ok; ++i)
        if (i != F.unit && F.degree[i] < 2) {
          ok = false;
          w = bname(F, i);
        }
    }
    rep.add("simply-connected: coideal degrees >= 2", ok, w);
  }

  // d^2 = 0.
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Vec dd;
      for (const auto& [j, c] : F.d[i])
        for (const auto& [k, c2] : F.d[j]) acc(dd, k, c * c2);
      if (!dd.empty()) {
        ok = false;
        w = bname(F, i);
      }
    }
    rep.add("d . d = 0", ok, w);
  }

  // d(e0) = 0, eps(e0) = 1, Delta(e0) = e0 (x) e0.
  {
    bool ok = F.d[F.unit].empty();
    rep.add("d(e0) = 0", ok, ok ? "" : bname(F, F.unit));
  }
  {
    bool ok = F.counit[F.unit].is_one();
    rep.add("eps(e0) = 1", ok, ok ? "" : F.counit[F.unit].str());
  }
  {
    Ten2 delta;
    for (const auto& [j, k, c] : F.coproduct[F.unit]) acc(delta, {j, k}, c);
    Ten2 expect;
    acc(expect, {F.unit, F.unit}, Rat(1));
    bool ok = delta == expect;
    rep.add("Delta(e0) = e0 (x) e0", ok, ok ? "" : bname(F, F.unit));
  }

  // Counit axiom (eps (x) id) Delta = id = (id (x) eps) Delta.
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Vec left, right;
      for (const auto& [j, k, c] : F.coproduct[i]) {
        acc(left, k, c * F.counit[j]);
        acc(right, j, c * F.counit[k]);
      }
      Vec id;
      acc(id, i, Rat(1));
      if (left != id || right != id) {
        ok = false;
        w = bname(F, i);
      }
    }
    rep.add("counit axiom", ok, w);
  }

  // Graded commutativity x.y = (-1)^{|x||y|} y.x.
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = x; y < n && ok; ++y) {
        Vec lhs, rhs;
        for (const auto& [k, c] : F.product[x][y]) acc(lhs, k, c);
        int s = cross_sign(F.degree[x], F.degree[y]);
        for (const auto& [k, c] : F.product[y][x]) acc(rhs, k, s == 1 ? c : -c);
        if (lhs != rhs) {
          ok = false;
          w = witness2(F, x, y);
        }
      }
    rep.add("product graded commutative", ok, w);
  }

  // Associativity.
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z) {
          Vec lhs, rhs;
          for (const auto& [k, c] : F.product[x][y])
            for (const auto& [l, c2] : F.product[k][z]) acc(lhs, l, c * c2);
          for (const auto& [k, c] : F.product[y][z])
            for (const auto& [l, c2] : F.product[x][k]) acc(rhs, l, c * c2);
          if (lhs != rhs) {
            ok = false;
            w = witness3(F, x, y, z);
          }
        }
    rep.add("product associative", ok, w);
  }

  // d is a derivation: d(xy) = dx.y + (-1)^{|x|} x.dy.
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        Vec lhs, rhs;
        for (const auto& [k, c] : F.product[x][y])
          for (const auto& [l, c2] : F.d[k]) acc(lhs, l, c * c2);
        for (const auto& [xd, c] : F.d[x])
          for (const auto& [l, c2] : F.product[xd][y]) acc(rhs, l, c * c2);
        int s = pow_sign(F.degree[x]);
        for (const auto& [yd, c] : F.d[y])
          for (const auto& [l, c2] : F.product[x][yd]) acc(rhs, l, s == 1 ? c * c2 : -(c * c2));
        if (lhs != rhs) {
          ok = false;
          w = witness2(F, x, y);
        }
      }
    rep.add("d is a derivation of the product", ok, w);
  }

  // d is a coderivation: Delta(dx) = (d (x) id + id (x) d) Delta(x).
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      Ten2 lhs, rhs;
      for (const auto& [xd, c] : F.d[x])
        for (const auto& [j, k, c2] : F.coproduct[xd]) acc(lhs, {j, k}, c * c2);
      for (const auto& [j, k, c] : F.coproduct[x]) {
        for (const auto& [jd, c2] : F.d[j]) acc(rhs, {jd, k}, c * c2);
        int s = pow_sign(F.degree[j]);
        for (const auto& [kd, c2] : F.d[k]) acc(rhs, {j, kd}, s == 1 ? c * c2 : -(c * c2));
      }
      if (lhs != rhs) {
        ok = false;
        w = bname(F, x);
      }
    }
    rep.add("d is a coderivation of the coproduct", ok, w);
  }

  // Cocommutativity: tau Delta = Delta.
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      Ten2 lhs, rhs;
      for (const auto& [j, k, c] : F.coproduct[x]) {
        acc(lhs, {j, k}, c);
        int s = cross_sign(F.degree[j], F.degree[k]);
        acc(rhs, {k, j}, s == 1 ? c : -c);
      }
      if (lhs != rhs) {
        ok = false;
        w = bname(F, x);
      }
    }
    rep.add("coproduct graded cocommutative", ok, w);
  }

  // Coassociativity.
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      Ten3 lhs, rhs;
      for (const auto& [j, k, c] : F.coproduct[x]) {
        for (const auto& [a, b, c2] : F.coproduct[j]) acc(lhs, {a, b, k}, c * c2);
        for (const auto& [a, b, c2] : F.coproduct[k]) acc(rhs, {j, a, b}, c * c2);
      }
      if (lhs != rhs) {
        ok = false;
        w = bname(F, x);
      }
    }
    rep.add("coproduct coassociative", ok, w);
  }

  // Module compatibility (both displayed routes):
  //   Delta(a.b) = sum (-1)^{(m+|b|)|a'|} a' (x) (a''. b) = sum (a.b') (x) b''.
  // The exponent is the Koszul resolution of the displayed (-1)^{m|a'|};
  // the two agree whenever m or |b| is even.
  {
    bool ok1 = true, ok2 = true;
    std::string w1, w2;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Ten2 lhs;
        for (const auto& [k, c] : F.product[a][b])
          for (const auto& [u, v, c2] : F.coproduct[k]) acc(lhs, {u, v}, c * c2);
        Ten2 r1;
        for (const auto& [ap, app, c] : F.coproduct[a]) {
          int s = cross_sign(F.m + F.degree[b], F.degree[ap]);
          for (const auto& [k, c2] : F.product[app][b])
            acc(r1, {ap, k}, s == 1 ? c * c2 : -(c * c2));
        }
        Ten2 r2;
        for (const auto& [bp, bpp, c] : F.coproduct[b])
          for (const auto& [k, c2] : F.product[a][bp]) acc(r2, {k, bpp}, c * c2);
        if (ok1 && lhs != r1) {
          ok1 = false;
          w1 = witness2(F, a, b);
        }
        if (ok2 && lhs != r2) {
          ok2 = false;
          w2 = witness2(F, a, b);
        }
      }
    rep.add("module compatibility (left route)", ok1, w1);
    rep.add("module compatibility (right route)", ok2, w2);
  }

  // Pairing: graded symmetric on V, supported in complementary degrees.
  {
    bool ok = true, okdeg = true;
    std::string w, wdeg;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Rat p = F.pairing(x, y), q = F.pairing(y, x);
        int s = cross_sign(F.degree[x], F.degree[y]);
        if (ok && p != (s == 1 ? q : -q)) {
          ok = false;
          w = witness2(F, x, y);
        }
        if (okdeg && !p.is_zero() && F.degree[x] + F.degree[y] != F.m) {
          okdeg = false;
          wdeg = witness2(F, x, y);
        }
      }
    rep.add("pairing graded symmetric", ok, w);
    rep.add("pairing supported in degree m", okdeg, wdeg);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Coideal

Coideal coideal(const Frobenius& F) {
  Coideal C;
  C.F = &F;
  const int n = static_cast<int>(F.dim());
  C.vtoc.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (i == F.unit) continue;
    C.vtoc[i] = static_cast<int>(C.letters.size());
    C.letters.push_back(i);
    C.deg.push_back(F.degree[i]);
  }
  C.dbar.resize(C.letters.size());
  C.dC.resize(C.letters.size());
  for (size_t c = 0; c < C.letters.size(); ++c) {
    int i = C.letters[c];
    for (const auto& [j, k, coeff] : F.coproduct[i]) {
      if (j == F.unit || k == F.unit) continue;
      C.dbar[c].emplace_back(C.vtoc[j], C.vtoc[k], coeff);
    }
    for (const auto& [j, coeff] : F.d[i]) {
      if (j == F.unit) continue;  // degree reasons keep this from firing
      C.dC[c].emplace_back(C.vtoc[j], coeff);
    }
  }
  return C;
}

std::optional<int> Coideal::letter_by_name(const std::string& n) const {
  for (size_t c = 0; c < letters.size(); ++c)
    if (name_of(static_cast<int>(c)) == n) return static_cast<int>(c);
  return std::nullopt;
}

}  // namespace necklace
