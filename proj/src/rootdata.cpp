#include "alc/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace alc {
namespace {

IMat cartan_of_simple_type(char family, int n) {
  auto bad = [&] {
    throw ConfigError(std::string("unsupported type ") + family + std::to_string(n));
  };
  if (n < 1) bad();
  IMat a(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, Int down = -1, Int up = -1) {
    a[i][j] = down;  // <alpha_j, alpha_i^vee>
    a[j][i] = up;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_n short
      if (n < 2) bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':  // alpha_n long
      if (n < 2) bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      break;
    case 'D':
      if (n < 3) bad();
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) bad();
      // Bourbaki numbering: node 2 attaches to node 4.
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) bad();
      link(0, 1);
      link(1, 2, -2, -1);
      link(2, 3);
      break;
    case 'G':
      if (n != 2) bad();
      link(0, 1, -3, -1);
      break;
    default:
      bad();
  }
  return a;
}

IMat parse_type_label(const std::string& label) {
  IMat blocks;
  std::vector<IMat> parts;
  std::size_t i = 0;
  while (i < label.size()) {
    char fam = static_cast<char>(std::toupper(label[i++]));
    std::size_t j = i;
    while (j < label.size() && std::isdigit(label[j])) ++j;
    if (j == i) throw ConfigError("type label missing rank: " + label);
    int n = std::stoi(label.substr(i, j - i));
    parts.push_back(cartan_of_simple_type(fam, n));
    i = j;
    if (i < label.size()) {
      if (label[i] == 'x' || label[i] == 'X' || label[i] == '*')
        ++i;
      else
        throw ConfigError("cannot parse type label: " + label);
    }
  }
  if (parts.empty()) throw ConfigError("empty type label");
  int total = 0;
  for (const auto& p : parts) total += static_cast<int>(p.size());
  IMat a(total, IVec(total, 0));
  int off = 0;
  for (const auto& p : parts) {
    int n = static_cast<int>(p.size());
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a[off + r][off + c] = p[r][c];
    off += n;
  }
  return a;
}

void validate_finite_type(const IMat& a) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw ConfigError("Cartan matrix is not square");
    if (a[i][i] != 2) throw ConfigError("Cartan diagonal entry != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw ConfigError("positive off-diagonal Cartan entry");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw ConfigError("Cartan zero pattern not symmetric");
    }
  }
  // Symmetrizer d_i > 0 with d_i a_ij = d_j a_ji, per connected component.
  std::vector<Rat> d(n, Rat(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Rat dj = d[i] * Rat(a[i][j]) / Rat(a[j][i]);
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw ConfigError("Cartan matrix not symmetrizable: not finite type");
        }
      }
    }
  }
  // Positive definiteness of the symmetrized matrix via leading minors.
  Mat s(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = d[i] * Rat(a[i][j]);
  for (int k = 1; k <= n; ++k) {
    Mat minor(k, Vec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = s[i][j];
    // Exact determinant by elimination.
    Rat det = 1;
    for (int c = 0; c < k; ++c) {
      int piv = -1;
      for (int r = c; r < k; ++r)
        if (minor[r][c] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        det = 0;
        break;
      }
      if (piv != c) {
        std::swap(minor[piv], minor[c]);
        det = -det;
      }
      det *= minor[c][c];
      for (int r = c + 1; r < k; ++r) {
        Rat f = minor[r][c] / minor[c][c];
        for (int cc = c; cc < k; ++cc) minor[r][cc] -= f * minor[c][cc];
      }
    }
    if (det <= 0)
      throw ConfigError("Cartan matrix not positive definite: not finite type");
  }
}

}  // namespace

Int RootDatum::pair_int(const IVec& lambda, const IVec& coroot) const {
  Int s = 0;
  for (int i = 0; i < rank; ++i) s += lambda[i] * coroot[i];
  return s;
}

Rat RootDatum::pair(const Vec& lambda, const IVec& coroot) const {
  Rat s = 0;
  for (int i = 0; i < rank; ++i) s += lambda[i] * Rat(coroot[i]);
  return s;
}

Vec RootDatum::reflect(int i, const Vec& lambda) const {
  // s_i(v) = v - <v, alpha_i^vee> alpha_i; alpha_i's fw coords are column i.
  Vec r(lambda);
  Rat c = lambda[i];
  for (int j = 0; j < rank; ++j) r[j] -= c * Rat(cartan[j][i]);
  return r;
}

RootDatum build_root_datum(const std::string& type_label) {
  RootDatum rd = build_root_datum(parse_type_label(type_label), type_label);
  return rd;
}

RootDatum build_root_datum(const IMat& cartan, const std::string& label) {
  validate_finite_type(cartan);
  RootDatum rd;
  rd.label = label;
  rd.rank = static_cast<int>(cartan.size());
  rd.cartan = cartan;
  rd.rho.assign(rd.rank, 1);

  // Reflection closure on (root, coroot) coordinate pairs.
  std::set<std::pair<IVec, IVec>> seen;
  std::vector<std::pair<IVec, IVec>> frontier;
  for (int i = 0; i < rd.rank; ++i) {
    IVec e(rd.rank, 0);
    e[i] = 1;
    seen.insert({e, e});
    frontier.push_back({e, e});
  }
  constexpr std::size_t kMaxRoots = 10000;
  while (!frontier.empty()) {
    auto [c, k] = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < rd.rank; ++i) {
      // <alpha, alpha_i^vee> = (A c)_i ; <alpha_i, alpha^vee> = (A^T k)_i.
      Int pc = 0, pk = 0;
      for (int j = 0; j < rd.rank; ++j) {
        pc += cartan[i][j] * c[j];
        pk += cartan[j][i] * k[j];
      }
      IVec c2(c), k2(k);
      c2[i] -= pc;
      k2[i] -= pk;
      if (seen.insert({c2, k2}).second) frontier.push_back({c2, k2});
      if (seen.size() > 2 * kMaxRoots)
        throw ConfigError("root closure does not terminate: not finite type");
    }
  }
  for (const auto& [c, k] : seen) {
    bool positive = true;
    for (Int x : c)
      if (x < 0) positive = false;
    if (!positive) continue;
    PosRoot pr;
    pr.root = c;
    pr.coroot = k;
    pr.fw.assign(rd.rank, 0);
    for (int i = 0; i < rd.rank; ++i)
      for (int j = 0; j < rd.rank; ++j) pr.fw[i] += cartan[i][j] * c[j];
    rd.pos_roots.push_back(std::move(pr));
  }
  std::sort(rd.pos_roots.begin(), rd.pos_roots.end(),
            [](const PosRoot& a, const PosRoot& b) { return a.root < b.root; });
  return rd;
}

Weight dot_action(const RootDatum& rd, const std::vector<int>& word, const Weight& lambda) {
  Vec v(lambda.coords);
  if (static_cast<int>(v.size()) != rd.rank) throw GeometryError("weight has wrong rank");
  for (int i = 0; i < rd.rank; ++i) v[i] += 1;  // + rho
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rd.rank) throw GeometryError("reflection index out of range");
    v = rd.reflect(*it, v);
  }
  for (int i = 0; i < rd.rank; ++i) v[i] -= 1;
  return Weight{std::move(v)};
}

std::vector<IMat> weyl_elements(const RootDatum& rd, std::size_t max_size) {
  const int n = rd.rank;
  IMat id(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::vector<IMat> gens;
  for (int i = 0; i < n; ++i) {
    IMat s(id);
    for (int j = 0; j < n; ++j) s[j][i] -= rd.cartan[j][i];
    gens.push_back(std::move(s));
  }
  std::set<IMat> seen{id};
  std::vector<IMat> frontier{id};
  while (!frontier.empty()) {
    IMat w = frontier.back();
    frontier.pop_back();
    for (const auto& s : gens) {
      IMat p(n, IVec(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) p[i][j] += s[i][k] * w[k][j];
      if (seen.insert(p).second) frontier.push_back(p);
      if (seen.size() > max_size)
        throw ConfigError("Weyl group too large for exhaustive enumeration");
    }
  }
  return {seen.begin(), seen.end()};
}

LeviSpec levi_sublattice(const RootDatum& rd, std::vector<int> levi_simples) {
  std::sort(levi_simples.begin(), levi_simples.end());
  levi_simples.erase(std::unique(levi_simples.begin(), levi_simples.end()),
                     levi_simples.end());
  for (int i : levi_simples)
    if (i < 0 || i >= rd.rank) throw ConfigError("Levi simple index out of range");
  LeviSpec ls;
  ls.levi_simples = levi_simples;
  std::vector<bool> in_levi(rd.rank, false);
  for (int i : levi_simples) in_levi[i] = true;
  for (std::size_t r = 0; r < rd.pos_roots.size(); ++r) {
    bool supported = true;
    for (int i = 0; i < rd.rank; ++i)
      if (rd.pos_roots[r].root[i] != 0 && !in_levi[i]) supported = false;
    if (supported) ls.levi_roots.push_back(static_cast<int>(r));
  }
  for (int i = 0; i < rd.rank; ++i)
    if (!in_levi[i]) ls.lattice_basis.push_back(i);
  return ls;
}

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PRegularity is_p_regular(const RootDatum& rd, const IVec& lambda, Int p) {
  return is_p_regular(rd, lambda, p, weyl_elements(rd));
}

PRegularity is_p_regular(const RootDatum& rd, const IVec& lambda, Int p,
                         const std::vector<IMat>& weyl) {
  if (!is_prime(p)) throw ConfigError("p must be prime, got " + std::to_string(p));
  if (static_cast<int>(lambda.size()) != rd.rank)
    throw GeometryError("weight has wrong rank");
  PRegularity out;

  out.pairings_nonzero = true;
  IVec shifted = ivadd(lambda, rd.rho);
  for (const auto& r : rd.pos_roots)
    if (rd.pair_int(shifted, r.coroot) % p == 0) out.pairings_nonzero = false;

  out.stabilizer_trivial = true;
  for (const auto& w : weyl) {
    bool identity = true;
    for (int i = 0; i < rd.rank && identity; ++i)
      for (int j = 0; j < rd.rank; ++j)
        if (w[i][j] != (i == j ? 1 : 0)) {
          identity = false;
          break;
        }
    if (identity) continue;
    // w.lambda - lambda = w(lambda+rho) - (lambda+rho); trivial mod p*Lambda?
    bool fixes = true;
    for (int i = 0; i < rd.rank && fixes; ++i) {
      Int acc = -shifted[i];
      for (int j = 0; j < rd.rank; ++j) acc += w[i][j] * shifted[j];
      if (acc % p != 0) fixes = false;
    }
    if (fixes) {
      out.stabilizer_trivial = false;
      break;
    }
  }
  return out;
}

}  // namespace alc
