// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "osforge/verify.hpp"

#include <future>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "osforge/cartan.hpp"
#include "osforge/classify.hpp"
#include "osforge/corpus.hpp"
#include "osforge/groebner.hpp"
#include "osforge/invariants.hpp"
#include "osforge/module.hpp"
#include "osforge/os_algebra.hpp"
#include "osforge/sparse_matrix.hpp"

namespace osforge::verify {

using corpus::Instance;
using exterior::ExteriorElement;
using exterior::MonomialOrder;
using la::Field;
using la::Scalar;
using matroid::Matroid;

namespace {

const std::map<std::string, std::string>& law_registry() {
  static const std::map<std::string, std::string> laws = {
      {"rref-idempotent", "rref(rref(A)) = rref(A), pivots strictly increase"},
      {"rank-nullity", "rank(A) + dim ker(A) = #columns, kernel rows solve Ax=0"},
      {"cross-prime-rank",
       "ranks of integer matrices agree over Q and over GF(p) for good primes"},
      {"wedge-anticommute", "ab = (-1)^{|a||b|} ba for homogeneous a, b"},
      {"boundary-squared", "the derivation satisfies d(d(x)) = 0"},
      {"leibniz", "d(ab) = d(a) b + (-1)^{|a|} a d(b) for homogeneous a"},
      {"exterior-dims", "dim E_d = binom(n,d); H(E,t) = (1+t)^n"},
      {"rank-axioms",
       "r({}) = 0; r(S) <= r(S+i) <= r(S)+1; r is submodular"},
      {"closure-laws",
       "closure is extensive, idempotent, rank-preserving; flats are "
       "intersection-closed"},
      {"mobius-recursion",
       "mu(0,X) satisfies mu(X,X) = 1 and sums to zero on proper intervals"},
      {"beta-two-routes", "the subset-sum and flats-sum forms of beta agree"},
      {"crapo-connectivity", "beta(M) != 0 iff M is connected"},
      {"nbc-independent", "every nbc set is independent"},
      {"nbc-count-hilbert", "#nbc sets of size k = dim (E/J)_k"},
      {"hilbert-three-routes",
       "nbc counts = signed Mobius sum = linear-algebra dimensions of E/J"},
      {"hilbert-multiplicative", "H(E/J(A+B)) = H(E/J(A)) H(E/J(B))"},
      {"top-degree-rank", "d(E/J) = r(M) for loopless M"},
      {"hilbert-taylor-beta",
       "H(E/J,t)/(1+t) at t = -1 equals (-1)^{r-1} beta(M) for connected "
       "loopless M"},
      {"hilbert-factorization",
       "H(E/J,t) = (1+t)^k Q(t) with Q(-1) != 0 and k = #components"},
      {"factorization-needs-linear-injective",
       "the quotient by (e12,e13,e14,e234) has (1+t) | H yet depth 0"},
      {"uniform-invariants",
       "(depth, cx, reg, d) of E/J(U(m,n)) is (1, n-1, m-1, m) for 0<m<n and "
       "(n, 0, 0, n) for m = n"},
      {"rank3-table",
       "(depth, cx, reg) = (1, n-1, 2), (2, n-2, 1), (3, 0, 0) for the three "
       "rank-3 classes"},
      {"betti-closed-form",
       "total Betti numbers of linear-class OS ideals match the closed forms"},
      {"power-betti",
       "beta_{i,i+t}(m^t) = binom(n+i, t+i) binom(t+i-1, i), concentrated"},
      {"stable-betti-cartan",
       "the stable-ideal Betti formula equals Cartan homology dimensions"},
      {"cross-field-betti",
       "Betti tables of corpus OS ideals agree over GF(p) and the rationals"},
      {"linear-injective",
       "the Bass table of E/J is concentrated on the d = r(M) diagonal"},
      {"ei-regular", "every variable e_i is E/J-regular for loopless M"},
      {"fast-regular-agrees",
       "the single-degree regularity check at d agrees with the full check"},
      {"reg-plus-depth", "reg E/J + depth E/J = d(E/J) = r(M)"},
      {"regseq-permutation", "permutations of regular sequences stay regular"},
      {"dual-mod-regular",
       "(M/(v_1..v_s)M)* has the graded dimensions of v_1...v_s (0:J)"},
      {"ini-broken-circuit",
       "ini(J) under the large-index revlex order is the broken circuit ideal"},
      {"gin-strongly-stable", "gin(J) is strongly stable"},
      {"gin-seed-stable", "gin agrees across independent seeds"},
      {"gin-hilbert", "H(E/J) = H(E/ini J) = H(E/gin J)"},
      {"betti-monotone-ini", "beta(E/J) <= beta(E/ini J) entrywise"},
      {"mu-monotone-ini", "mu(E/J) <= mu(E/ini J) entrywise"},
      {"depth-cx-transfer",
       "depth and cx agree between E/J and E/gin J, and match n - max max(u)"},
      {"gin-cx-d-formulas",
       "d(E/gin J) = n - max min(u) over G(gin J), as a direct computation"},
      {"dual-gin", "initial ideals commute with annihilator duality"},
      {"gin-idempotent", "gin(gin(J)) = gin(J)"},
      {"uniform-reduction", "J(U(m,n)) + (e_1) = (e_A : |A| = m) + (e_1)"},
      {"duality-dims", "dim (0:J)_i = dim (E/J)_{n-i}"},
      {"depth-dual", "depth E/J = depth (0:J)"},
      {"double-annihilator", "0:(0:J) = J for monomial ideals"},
      {"bass-two-routes",
       "Bass numbers via the annihilator ideal and via the Cartan cocomplex "
       "agree"},
      {"cartan-co-hom",
       "dim H_i(v;M)_d = dim H^i(v;M*)_{n-d} for all i and degrees d"},
      {"classification-soundness",
       "the structural linear-resolution classification matches the truncated "
       "Betti table"},
      {"predicted-invariants",
       "(k, n-k, l-k, l) matches the homology engine for loopless M"},
      {"predicted-betti",
       "closed-form total Betti numbers match the engine on the linear classes"},
      {"linear-relations-connected",
       "linear relations of the OS ideal force connectedness"},
  };
  return laws;
}

CheckResult pass(const std::string& law, const std::string& instance) {
  return CheckResult{law, instance, Status::pass, "", ""};
}

CheckResult fail(const std::string& law, const std::string& instance,
                 const std::string& expected, const std::string& got) {
  return CheckResult{law, instance, Status::fail, expected, got};
}

CheckResult generic_fail(const std::string& law, const std::string& instance,
                         const std::string& what) {
  return CheckResult{law, instance, Status::genericity, "", what};
}

std::vector<ExteriorElement> os_gens(const Matroid& m, const Field& field) {
  return osalg::os_ideal(m, field).generators;
}

std::string fmt_tuple(std::initializer_list<long long> vals) {
  std::string out = "(";
  bool first = true;
  for (long long v : vals) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}

// Maps fn over the instances, possibly concurrently; results keep the
// canonical instance order regardless of schedule.
template <typename Fn>
std::vector<CheckResult> map_instances(const std::vector<Instance>& instances,
                                       Fn&& fn) {
  std::vector<std::vector<CheckResult>> partial(instances.size());
  unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                        4);
  if (workers >= 2 && instances.size() >= 8) {
    std::vector<std::future<void>> futures;
    std::size_t chunk = (instances.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(instances.size(), begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, [&, begin, end]() {
        for (std::size_t k = begin; k < end; ++k) {
          partial[k] = fn(instances[k]);
        }
      }));
    }
    for (auto& f : futures) f.get();
  } else {
    for (std::size_t k = 0; k < instances.size(); ++k) {
      partial[k] = fn(instances[k]);
    }
  }
  std::vector<CheckResult> out;
  for (auto& p : partial) {
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

ExteriorElement random_homogeneous(int n, int d, const Field& f,
                                   std::mt19937_64& rng) {
  ExteriorElement out = ExteriorElement::zero(n, f);
  for (exterior::Monomial u :
       exterior::graded_basis(n, d, MonomialOrder::std_revlex)) {
    out = out + ExteriorElement::term(n, f, u, f.random(rng));
  }
  return out;
}

}  // namespace

std::string law_statement(const std::string& law) {
  auto it = law_registry().find(law);
  return it == law_registry().end() ? "" : it->second;
}

std::vector<CheckResult> check_exactla(const RunConfig& cfg, int cases) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(cfg.seed);
  const Field fq = Field::rationals();
  std::vector<Field> fields = {cfg.field, fq};
  int per_law = std::max(1, cases / 3);

  int bad = 0;
  for (int trial = 0; trial < per_law && bad == 0; ++trial) {
    const Field& f = fields[trial % fields.size()];
    int rows = 1 + static_cast<int>(rng() % 8);
    int cols = 1 + static_cast<int>(rng() % 8);
    la::SparseMatrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if (rng() % 2) m.set(r, c, f.random(rng));
      }
    }
    auto r1 = la::rref(m);
    auto r2 = la::rref(r1.reduced);
    bool mono = true;
    for (std::size_t k = 0; k + 1 < r1.pivot_cols.size(); ++k) {
      mono = mono && r1.pivot_cols[k] < r1.pivot_cols[k + 1];
    }
    if (!(r2.reduced == r1.reduced) || !mono) {
      out.push_back(fail("rref-idempotent", "random case " + std::to_string(trial),
                         "fixed point", "changed"));
      ++bad;
    }
  }
  if (bad == 0) {
    out.push_back(pass("rref-idempotent",
                       std::to_string(per_law) + " random matrices"));
  }

  bad = 0;
  for (int trial = 0; trial < per_law && bad == 0; ++trial) {
    const Field& f = fields[trial % fields.size()];
    int rows = 1 + static_cast<int>(rng() % 8);
    int cols = 1 + static_cast<int>(rng() % 8);
    la::SparseMatrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if (rng() % 2) m.set(r, c, f.random(rng));
      }
    }
    auto kb = la::kernel_basis(m);
    bool ok = kb.rows() == cols - la::rank(m);
    for (int kr = 0; kr < kb.rows() && ok; ++kr) {
      ok = m.apply(kb.row(kr)).empty();
    }
    if (!ok) {
      out.push_back(fail("rank-nullity", "random case " + std::to_string(trial),
                         "kernel of the right size inside ker", "violated"));
      ++bad;
    }
  }
  if (bad == 0) {
    out.push_back(
        pass("rank-nullity", std::to_string(per_law) + " random matrices"));
  }

  bad = 0;
  std::vector<Field> primes = {Field::prime(32003), Field::prime(1000003),
                               Field::prime(2147483629)};
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int trial = 0; trial < per_law && bad == 0; ++trial) {
    int rows = 2 + static_cast<int>(rng() % 5);
    int cols = 2 + static_cast<int>(rng() % 5);
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    la::SparseMatrix mq(fq, rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        a[r][c] = entry(rng);
        mq.set(r, c, fq.from_int(a[r][c]));
      }
    }
    int rank_q = la::rank(mq);
    int agreeing = 0;
    for (const Field& fp : primes) {
      la::SparseMatrix mp(fp, rows, cols);
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) mp.set(r, c, fp.from_int(a[r][c]));
      }
      int rank_p = la::rank(mp);
      if (rank_p > rank_q) {
        ++bad;
        break;
      }
      if (rank_p == rank_q) ++agreeing;
    }
    if (agreeing == 0) ++bad;
    if (bad) {
      out.push_back(fail("cross-prime-rank",
                         "random case " + std::to_string(trial),
                         "some prime matches the rational rank", "none did"));
    }
  }
  if (bad == 0) {
    out.push_back(pass("cross-prime-rank",
                       std::to_string(per_law) + " integer matrices"));
  }
  return out;
}

std::vector<CheckResult> check_exterior_axioms(const RunConfig& cfg, int cases) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(cfg.seed);
  const Field& f = cfg.field;
  int n = 5;
  int per_law = std::max(1, cases / 3);

  long long bad_anti = 0, bad_boundary = 0, bad_leibniz = 0;
  for (int trial = 0; trial < per_law; ++trial) {
    int da = static_cast<int>(rng() % (n + 1));
    int db = static_cast<int>(rng() % (n + 1));
    ExteriorElement a = random_homogeneous(n, da, f, rng);
    ExteriorElement b = random_homogeneous(n, db, f, rng);

    ExteriorElement ab = exterior::wedge(a, b);
    ExteriorElement ba = exterior::wedge(b, a);
    if ((da * db) % 2 == 1) ba = ba.negated();
    if (!ab.equals(ba)) ++bad_anti;

    if (!exterior::boundary(exterior::boundary(a)).is_zero()) ++bad_boundary;

    ExteriorElement lhs = exterior::boundary(ab);
    ExteriorElement second = exterior::wedge(a, exterior::boundary(b));
    if (da % 2 == 1) second = second.negated();
    ExteriorElement rhs = exterior::wedge(exterior::boundary(a), b) + second;
    if (!lhs.equals(rhs)) ++bad_leibniz;
  }
  auto render = [&](const char* law, long long bad) {
    if (bad == 0) {
      out.push_back(pass(law, std::to_string(per_law) + " random pairs (n=5)"));
    } else {
      out.push_back(fail(law, "random pairs", "0 violations",
                         std::to_string(bad) + " violations"));
    }
  };
  render("wedge-anticommute", bad_anti);
  render("boundary-squared", bad_boundary);
  render("leibniz", bad_leibniz);

  bool dims_ok = true;
  for (int nn = 1; nn <= 6 && dims_ok; ++nn) {
    std::vector<long long> dims;
    for (int d = 0; d <= nn; ++d) {
      auto basis = exterior::graded_basis(nn, d, cfg.order);
      dims_ok = dims_ok && static_cast<long long>(basis.size()) ==
                               exterior::binomial(nn, d);
      dims.push_back(static_cast<long long>(basis.size()));
    }
    dims_ok = dims_ok && poly::ZPoly(dims) == poly::ZPoly::one_plus_t_power(nn);
  }
  out.push_back(dims_ok
                    ? pass("exterior-dims", "n = 1..6")
                    : fail("exterior-dims", "n = 1..6", "(1+t)^n", "mismatch"));
  return out;
}

std::vector<CheckResult> check_matroid_axioms(const RunConfig& cfg, int cases) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(cfg.seed);
  std::vector<Instance> zoo = corpus::loopless_corpus(6);
  for (auto& inst : corpus::loop_corpus()) zoo.push_back(inst);

  int per_instance = std::max(1, cases / static_cast<int>(zoo.size()));
  long long bad_rank = 0, bad_closure = 0;
  for (const Instance& inst : zoo) {
    const Matroid& m = inst.m;
    matroid::SetMask full =
        m.n() == 0 ? 0 : (matroid::SetMask{1} << m.n()) - 1;
    if (m.rank_of(0) != 0) ++bad_rank;
    for (int trial = 0; trial < per_instance; ++trial) {
      matroid::SetMask s = static_cast<matroid::SetMask>(rng()) & full;
      matroid::SetMask t = static_cast<matroid::SetMask>(rng()) & full;
      int rs = m.rank_of(s);
      for (int i = 1; i <= m.n(); ++i) {
        int rsi = m.rank_of(s | (matroid::SetMask{1} << (i - 1)));
        if (rsi < rs || rsi > rs + 1) ++bad_rank;
      }
      if (m.rank_of(s | t) + m.rank_of(s & t) > rs + m.rank_of(t)) ++bad_rank;
      matroid::SetMask cl = m.closure(s);
      if ((cl & s) != s || m.closure(cl) != cl || m.rank_of(cl) != rs) {
        ++bad_closure;
      }
    }
  }
  out.push_back(bad_rank == 0 ? pass("rank-axioms", "corpus, random subsets")
                              : fail("rank-axioms", "corpus", "0 violations",
                                     std::to_string(bad_rank)));
  // closure laws + intersection-closed flats on the small instances
  long long bad_flats = 0;
  for (const Instance& inst : zoo) {
    if (inst.m.n() > 5) continue;
    auto lattice = inst.m.flats_lattice();
    for (const auto& a : lattice.flats) {
      for (const auto& b : lattice.flats) {
        matroid::SetMask meet = a.elements & b.elements;
        if (inst.m.closure(meet) != meet) ++bad_flats;
      }
    }
  }
  out.push_back((bad_closure + bad_flats) == 0
                    ? pass("closure-laws", "corpus")
                    : fail("closure-laws", "corpus", "0 violations",
                           std::to_string(bad_closure + bad_flats)));

  long long bad_mobius = 0;
  for (const Instance& inst : zoo) {
    if (inst.m.n() > 6) continue;
    auto lattice = inst.m.flats_lattice();
    auto mu = matroid::mobius(lattice);
    for (std::size_t z = 1; z < lattice.flats.size(); ++z) {
      long long total = 0;
      for (std::size_t y = 0; y < lattice.flats.size(); ++y) {
        if ((lattice.flats[y].elements & lattice.flats[z].elements) ==
            lattice.flats[y].elements) {
          total += mu[y];
        }
      }
      if (total != 0) ++bad_mobius;
    }
  }
  out.push_back(bad_mobius == 0 ? pass("mobius-recursion", "corpus lattices")
                                : fail("mobius-recursion", "corpus",
                                       "all interval sums zero",
                                       std::to_string(bad_mobius)));

  long long bad_beta = 0, bad_crapo = 0, bad_nbc = 0;
  for (const Instance& inst : zoo) {
    if (inst.m.n() > 8) continue;
    long long beta;
    try {
      beta = inst.m.beta_invariant();  // asserts the two routes agree
    } catch (const std::logic_error&) {
      ++bad_beta;
      continue;
    }
    if (!inst.m.has_loops() && inst.m.n() >= 2) {
      if ((beta != 0) != inst.m.is_connected()) ++bad_crapo;
    }
    if (!inst.m.has_loops()) {
      for (matroid::SetMask s : inst.m.nbc_sets()) {
        if (!inst.m.is_independent(s)) ++bad_nbc;
      }
    }
  }
  out.push_back(bad_beta == 0 ? pass("beta-two-routes", "corpus")
                              : fail("beta-two-routes", "corpus", "agree",
                                     std::to_string(bad_beta)));
  out.push_back(bad_crapo == 0 ? pass("crapo-connectivity", "corpus")
                               : fail("crapo-connectivity", "corpus",
                                      "beta != 0 iff connected",
                                      std::to_string(bad_crapo)));
  out.push_back(bad_nbc == 0 ? pass("nbc-independent", "corpus")
                             : fail("nbc-independent", "corpus",
                                    "all nbc sets independent",
                                    std::to_string(bad_nbc)));
  return out;
}

std::vector<CheckResult> check_hilbert(const RunConfig& cfg) {
  const Field& f = cfg.field;
  std::vector<Instance> zoo = corpus::loopless_corpus(8);

  std::vector<CheckResult> out = map_instances(zoo, [&](const Instance& inst) {
    std::vector<CheckResult> r;
    poly::ZPoly nbc = osalg::hilbert_nbc(inst.m);
    poly::ZPoly charpoly = osalg::hilbert_charpoly(inst.m);
    auto module =
        homology::module_from_quotient(os_gens(inst.m, f), inst.m.n(), f);
    poly::ZPoly engine = module.hilbert();
    if (nbc == charpoly && nbc == engine) {
      r.push_back(pass("hilbert-three-routes", inst.name));
    } else {
      r.push_back(fail("hilbert-three-routes", inst.name, nbc.str(),
                       charpoly.str() + " / " + engine.str()));
    }
    if (module.top_degree() == inst.m.rank()) {
      r.push_back(pass("top-degree-rank", inst.name));
    } else {
      r.push_back(fail("top-degree-rank", inst.name,
                       std::to_string(inst.m.rank()),
                       std::to_string(module.top_degree())));
    }
    return r;
  });

  // nbc count = Hilbert (same data, stated as the bridge law)
  bool nbc_ok = true;
  for (const Instance& inst : zoo) {
    if (inst.m.n() > 6) continue;
    auto mod = homology::module_from_quotient(os_gens(inst.m, f), inst.m.n(), f);
    std::map<int, int> counts;
    for (matroid::SetMask s : inst.m.nbc_sets()) ++counts[std::popcount(s)];
    for (int d = 0; d <= inst.m.n(); ++d) {
      int c = counts.count(d) ? counts[d] : 0;
      if (c != mod.dim(d)) nbc_ok = false;
    }
  }
  out.push_back(nbc_ok ? pass("nbc-count-hilbert", "loopless corpus")
                       : fail("nbc-count-hilbert", "loopless corpus",
                              "counts match dims", "mismatch"));

  // multiplicativity on direct sums
  bool mult_ok = true;
  std::string mult_witness;
  auto family = corpus::uniform_family();
  for (std::size_t a = 0; a < family.size() && mult_ok; ++a) {
    for (std::size_t b = a; b < family.size() && mult_ok; ++b) {
      if (family[a].m.n() + family[b].m.n() > 8) continue;
      auto sum = Matroid::direct_sum(family[a].m, family[b].m);
      if (osalg::hilbert_series(sum) !=
          osalg::hilbert_series(family[a].m) *
              osalg::hilbert_series(family[b].m)) {
        mult_ok = false;
        mult_witness = family[a].name + "+" + family[b].name;
      }
    }
  }
  out.push_back(mult_ok ? pass("hilbert-multiplicative", "uniform sums, n <= 8")
                        : fail("hilbert-multiplicative", mult_witness,
                               "product", "mismatch"));

  // loop case: zero series
  for (const Instance& inst : corpus::loop_corpus()) {
    if (osalg::hilbert_series(inst.m).is_zero()) {
      out.push_back(pass("hilbert-three-routes", inst.name + " (loop, zero)"));
    } else {
      out.push_back(
          fail("hilbert-three-routes", inst.name, "0", "nonzero series"));
    }
  }

  // Taylor coefficient at -1: H/(1+t) evaluated at -1 recovers beta(M)
  long long bad_taylor = 0;
  std::string taylor_witness;
  for (const Instance& inst : zoo) {
    if (!inst.m.is_connected()) continue;
    auto q = osalg::hilbert_series(inst.m).divide_exact(poly::ZPoly({1, 1}));
    long long want =
        ((inst.m.rank() - 1) % 2 == 0 ? 1 : -1) * inst.m.beta_invariant();
    if (!q || q->eval(-1) != want) {
      ++bad_taylor;
      taylor_witness = inst.name;
    }
  }
  out.push_back(bad_taylor == 0
                    ? pass("hilbert-taylor-beta", "connected loopless corpus")
                    : fail("hilbert-taylor-beta", taylor_witness,
                           "(-1)^{r-1} beta(M)", "mismatch"));
  return out;
}

std::vector<CheckResult> check_hilbert_factorization(const RunConfig& cfg) {
  const Field& f = cfg.field;
  std::vector<Instance> zoo = corpus::loopless_corpus(8);
  std::vector<CheckResult> out = map_instances(zoo, [&](const Instance& inst) {
    std::vector<CheckResult> r;
    auto h = osalg::hilbert_series(inst.m);
    auto factor = homology::hilbert_factor(h);
    int k = static_cast<int>(inst.m.components().size());
    if (factor.s == k && factor.q.eval(-1) != 0) {
      r.push_back(pass("hilbert-factorization", inst.name));
    } else {
      r.push_back(fail("hilbert-factorization", inst.name,
                       "(1+t)^" + std::to_string(k) + " Q, Q(-1) != 0",
                       "(1+t)^" + std::to_string(factor.s) +
                           " Q with Q(-1) = " +
                           std::to_string(factor.q.eval(-1))));
    }
    return r;
  });

  // the counterexample: (1+t) | H but depth = 0
  auto gens = corpus::counterexample_ideal(f);
  auto mod = homology::module_from_quotient(gens, 4, f);
  auto factor = homology::hilbert_factor(mod.hilbert());
  auto dr = homology::depth(mod, cfg.trials, cfg.seed);
  try {
    auto gin_j = groebner::gin(gens, 4, f, 3, cfg.seed);
    int depth_gin = 4 - monomial::cx_stable(gin_j);
    if (factor.s >= 1 && dr.value == 0 && depth_gin == 0) {
      out.push_back(pass("factorization-needs-linear-injective",
                         "(e12,e13,e14,e234), n=4"));
    } else {
      out.push_back(fail(
          "factorization-needs-linear-injective", "(e12,e13,e14,e234), n=4",
          "s >= 1 and depth = 0",
          "s = " + std::to_string(factor.s) +
              ", depth = " + std::to_string(dr.value) +
              ", gin depth = " + std::to_string(depth_gin)));
    }
  } catch (const groebner::GenericityError& e) {
    out.push_back(generic_fail("factorization-needs-linear-injective",
                               "(e12,e13,e14,e234), n=4", e.what()));
  }
  return out;
}

std::vector<CheckResult> check_uniform_invariants(const RunConfig& cfg) {
  const Field& f = cfg.field;
  std::vector<Instance> family = corpus::uniform_family();
  return map_instances(family, [&](const Instance& inst) {
    std::vector<CheckResult> r;
    int n = inst.m.n();
    int m = inst.m.rank();
    int ed = m < n ? 1 : n;
    int ec = m < n ? n - 1 : 0;
    int er = m < n ? m - 1 : 0;
    int edd = m < n ? m : n;
    try {
      auto inv = homology::invariants(os_gens(inst.m, f), n, f, cfg.imax,
                                      cfg.seed, cfg.trials);
      bool ok = inv.depth == ed && inv.cx == ec && inv.reg == er &&
                inv.d == edd && inv.depth_consistent && inv.reg_consistent;
      if (ok) {
        r.push_back(pass("uniform-invariants", inst.name));
      } else {
        r.push_back(fail("uniform-invariants", inst.name,
                         fmt_tuple({ed, ec, er, edd}),
                         fmt_tuple({inv.depth, inv.cx, inv.reg, inv.d}) +
                             (inv.depth_consistent ? "" : " depth-interval[" +
                                  std::to_string(inv.depth_lower) + "," +
                                  std::to_string(inv.depth_upper) + "]")));
      }
    } catch (const groebner::GenericityError& e) {
      r.push_back(generic_fail("uniform-invariants", inst.name, e.what()));
    }
    return r;
  });
}

std::vector<CheckResult> check_rank3_table(const RunConfig& cfg) {
  const Field& f = cfg.field;
  struct Row {
    std::string name;
    Matroid m;
    int depth, cx, reg;
  };
  std::vector<Row> rows;
  for (int n = 4; n <= 6; ++n) {
    rows.push_back({"U(3," + std::to_string(n) + ")", Matroid::uniform(3, n), 1,
                    n - 1, 2});
    rows.push_back({"U(2," + std::to_string(n - 1) + ")+U(1,1)",
                    Matroid::direct_sum(Matroid::uniform(2, n - 1),
                                        Matroid::uniform(1, 1)),
                    2, n - 2, 1});
  }
  rows.push_back({"rank3-one-triple(5)", corpus::rank3_one_triple(), 1, 4, 2});
  rows.push_back({"rank3-two-triples(5)", corpus::rank3_two_triples(), 1, 4, 2});
  rows.push_back({"U(3,3)", Matroid::uniform(3, 3), 3, 0, 0});

  std::vector<CheckResult> out;
  for (const Row& row : rows) {
    try {
      auto inv = homology::invariants(os_gens(row.m, f), row.m.n(), f, cfg.imax,
                                      cfg.seed, cfg.trials);
      if (inv.depth == row.depth && inv.cx == row.cx && inv.reg == row.reg &&
          inv.depth_consistent) {
        out.push_back(pass("rank3-table", row.name));
      } else {
        out.push_back(fail("rank3-table", row.name,
                           fmt_tuple({row.depth, row.cx, row.reg}),
                           fmt_tuple({inv.depth, inv.cx, inv.reg})));
      }
    } catch (const groebner::GenericityError& e) {
      out.push_back(generic_fail("rank3-table", row.name, e.what()));
    }
  }
  return out;
}

std::vector<CheckResult> check_betti_formulas(const RunConfig& cfg) {
  const Field& f = cfg.field;
  std::vector<CheckResult> out;

  std::vector<Instance> bases = {
      {"U(2,3)", Matroid::uniform(2, 3)},
      {"U(2,4)", Matroid::uniform(2, 4)},
      {"U(2,5)", Matroid::uniform(2, 5)},
      {"U(3,4)", Matroid::uniform(3, 4)},
      {"U(1,2)+U(1,2)",
       Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2))},
      {"U(1,2)+U(1,3)",
       Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 3))},
  };
  std::vector<Instance> instances;
  for (const auto& b : bases) {
    instances.push_back(b);
    instances.push_back({b.name + "+U(1,1)",
                         Matroid::direct_sum(b.m, Matroid::uniform(1, 1))});
  }

  out = map_instances(instances, [&](const Instance& inst) {
    std::vector<CheckResult> r;
    auto betti = homology::betti_table(
        homology::module_from_ideal(os_gens(inst.m, f), inst.m.n(), f), 4);
    bool ok = true;
    std::string expected, got;
    for (int i = 0; i <= 4; ++i) {
      auto predicted = classify::predicted_betti(inst.m, i);
      if (!predicted) {
        ok = false;
        expected = "closed form defined";
        got = "no class";
        break;
      }
      if (betti.total(i) != *predicted) {
        ok = false;
        expected = "beta_" + std::to_string(i) + " = " + std::to_string(*predicted);
        got = std::to_string(betti.total(i));
        break;
      }
    }
    r.push_back(ok ? pass("betti-closed-form", inst.name)
                   : fail("betti-closed-form", inst.name, expected, got));
    return r;
  });

  // powers of the maximal ideal
  for (int n = 1; n <= 5; ++n) {
    for (int t = 1; t <= n; ++t) {
      auto mt = monomial::power_ideal(n, t);
      auto betti = homology::betti_table(
          homology::module_from_ideal(groebner::monomial_generators(mt, f), n, f),
          4);
      bool ok = true;
      std::string expected, got;
      for (int i = 0; i <= 4 && ok; ++i) {
        long long want = monomial::power_betti(n, t, i);
        if (betti.at(i, i + t) != want || betti.total(i) != want) {
          ok = false;
          expected = "beta_{i,i+t} = total = " + std::to_string(want);
          got = std::to_string(betti.at(i, i + t)) + " / " +
                std::to_string(betti.total(i));
        }
      }
      std::string name =
          "m^" + std::to_string(t) + " in n=" + std::to_string(n);
      out.push_back(ok ? pass("power-betti", name)
                       : fail("power-betti", name, expected, got));
    }
  }

  // the stable-ideal formula agrees with Cartan homology on gins
  std::vector<Instance> small = corpus::loopless_corpus(5);
  auto stable_checks = map_instances(small, [&](const Instance& inst) {
    std::vector<CheckResult> r;
    try {
      auto gin_j = groebner::gin(os_gens(inst.m, f), inst.m.n(), f, 3, cfg.seed);
      if (gin_j.is_zero()) return r;
      auto betti = homology::betti_table(
          homology::module_from_ideal(groebner::monomial_generators(gin_j, f),
                                      inst.m.n(), f),
          4);
      bool ok = true;
      std::string expected, got;
      for (int i = 0; i <= 4 && ok; ++i) {
        for (int d = 0; d <= inst.m.n() && ok; ++d) {
          long long formula = monomial::stable_betti(gin_j, i, d);
          if (formula != betti.at(i, i + d)) {
            ok = false;
            expected = "beta_{" + std::to_string(i) + "," +
                       std::to_string(i + d) + "} = " + std::to_string(formula);
            got = std::to_string(betti.at(i, i + d));
          }
        }
      }
      r.push_back(ok ? pass("stable-betti-cartan", "gin J(" + inst.name + ")")
                     : fail("stable-betti-cartan", "gin J(" + inst.name + ")",
                            expected, got));
    } catch (const groebner::GenericityError& e) {
      r.push_back(generic_fail("stable-betti-cartan", inst.name, e.what()));
    }
    return r;
  });
  out.insert(out.end(), stable_checks.begin(), stable_checks.end());

  // Betti tables agree between the working field and the other exact field;
  // a characteristic anomaly on the corpus would surface here.
  {
    const Field other = cfg.field.is_prime_field()
                            ? Field::rationals()
                            : Field::prime(la::kDefaultPrime);
    long long bad = 0;
    std::string witness;
    for (const Instance& inst : corpus::loopless_corpus(4)) {
      auto b1 = homology::betti_table(
          homology::module_from_ideal(os_gens(inst.m, f), inst.m.n(), f), 3);
      auto b2 = homology::betti_table(
          homology::module_from_ideal(os_gens(inst.m, other), inst.m.n(), other),
          3);
      if (!(b1 == b2)) {
        ++bad;
        witness = inst.name;
      }
    }
    out.push_back(bad == 0
                      ? pass("cross-field-betti",
                             f.name() + " vs " + other.name() + ", n <= 4")
                      : fail("cross-field-betti", witness, "equal tables",
                             "fields disagree"));
  }
  return out;
}

std::vector<CheckResult> check_linear_injective(const RunConfig& cfg) {
  const Field& f = cfg.field;
  std::vector<Instance> zoo = corpus::loopless_corpus(6);
  return map_instances(zoo, [&](const Instance& inst) {
    std::vector<CheckResult> r;
    auto bass =
        homology::bass_table(os_gens(inst.m, f), inst.m.n(), f, 3);
    int d = inst.m.rank();
    bool ok = !bass.entries.empty();
    std::string got;
    for (const auto& [key, v] : bass.entries) {
      if (v != 0 && key.first + key.second != d) {
        ok = false;
        got = "mu_{" + std::to_string(key.first) + "," +
              std::to_string(key.second) + "} = " + std::to_string(v);
      }
    }
    r.push_back(ok ? pass("linear-injective", inst.name)
                   : fail("linear-injective", inst.name,
                          "entries only on i + j = " + std::to_string(d), got));
    return r;
  });
}

std::vector<CheckResult> check_regularity(const RunConfig& cfg) {
  const Field& f = cfg.field;
  std::vector<CheckResult> out;
  std::vector<Instance> zoo = corpus::loopless_corpus(6);

  // every variable is regular on a loopless OS algebra
  auto ei_checks = map_instances(zoo, [&](const Instance& inst) {
    std::vector<CheckResult> r;
    auto mod = homology::module_from_quotient(os_gens(inst.m, f), inst.m.n(), f);
    bool ok = true;
    int witness = 0;
    for (int i = 1; i <= inst.m.n() && ok; ++i) {
      std::vector<Scalar> v(inst.m.n(), f.zero());
      v[i - 1] = f.one();
      if (!homology::is_regular_element(v, mod)) {
        ok = false;
        witness = i;
      }
    }
    r.push_back(ok ? pass("ei-regular", inst.name)
                   : fail("ei-regular", inst.name, "all e_i regular",
                          "e_" + std::to_string(witness) + " is not"));
    return r;
  });
  out.insert(out.end(), ei_checks.begin(), ei_checks.end());

  // fast one-degree check agrees with the full one on random pairs
  {
    std::mt19937_64 rng(cfg.seed);
    std::vector<Instance> small = corpus::loopless_corpus(5);
    long long bad = 0;
    int pairs = 0;
    while (pairs < 100) {
      const Instance& inst = small[rng() % small.size()];
      auto mod =
          homology::module_from_quotient(os_gens(inst.m, f), inst.m.n(), f);
      std::vector<Scalar> v(inst.m.n(), f.zero());
      bool nonzero = false;
      for (auto& c : v) {
        c = f.random(rng);
        nonzero = nonzero || !f.is_zero(c);
      }
      if (!nonzero) continue;
      if (homology::is_regular_fast(v, mod, inst.m.rank()) !=
          homology::is_regular_element(v, mod)) {
        ++bad;
      }
      ++pairs;
    }
    out.push_back(bad == 0
                      ? pass("fast-regular-agrees", "100 random pairs")
                      : fail("fast-regular-agrees", "100 random pairs", "0",
                             std::to_string(bad)));
  }

  // reg + depth = d = r(M)
  auto reg_checks = map_instances(zoo, [&](const Instance& inst) {
    std::vector<CheckResult> r;
    try {
      auto inv = homology::invariants(os_gens(inst.m, f), inst.m.n(), f,
                                      cfg.imax, cfg.seed, cfg.trials);
      bool ok = inv.depth_consistent && inv.reg + inv.depth == inv.d &&
                inv.d == inst.m.rank();
      r.push_back(ok ? pass("reg-plus-depth", inst.name)
                     : fail("reg-plus-depth", inst.name,
                            "reg + depth = d = " + std::to_string(inst.m.rank()),
                            fmt_tuple({inv.reg, inv.depth, inv.d})));
    } catch (const groebner::GenericityError& e) {
      r.push_back(generic_fail("reg-plus-depth", inst.name, e.what()));
    }
    return r;
  });
  out.insert(out.end(), reg_checks.begin(), reg_checks.end());

  // permutations of the canonical regular sequence stay regular, and the
  // dual of the reduction has the dimensions of v_1...v_s (0:J)
  for (const Instance& inst : corpus::loopless_corpus(5)) {
    auto components = inst.m.components();
    int k = static_cast<int>(components.size());
    int n = inst.m.n();
    std::vector<std::vector<Scalar>> seq;
    exterior::Monomial product = 0;
    for (auto comp : components) {
      int i = matroid::set_elements(comp).front();
      std::vector<Scalar> v(n, f.zero());
      v[i - 1] = f.one();
      seq.push_back(std::move(v));
      product |= exterior::Monomial{1} << (i - 1);
    }
    auto gens = os_gens(inst.m, f);
    auto mod = homology::module_from_quotient(gens, n, f);
    bool fwd = homology::regular_sequence_check(seq, mod);
    std::vector<std::vector<Scalar>> rev(seq.rbegin(), seq.rend());
    bool bwd = homology::regular_sequence_check(rev, mod);
    out.push_back((fwd && bwd)
                      ? pass("regseq-permutation", inst.name)
                      : fail("regseq-permutation", inst.name,
                             "both orders regular",
                             std::string(fwd ? "fwd" : "!fwd") + "/" +
                                 (bwd ? "bwd" : "!bwd")));

    // dual-of-quotient dimensions
    homology::GradedModuleRep reduced = mod;
    std::vector<int> alive(n);
    for (int i = 0; i < n; ++i) alive[i] = i;
    for (const auto& v : seq) {
      // rewrite v in the reduced coordinates
      std::vector<Scalar> cur(reduced.n(), f.zero());
      for (int i = 0; i < reduced.n(); ++i) cur[i] = v[alive[i]];
      int pivot = -1;
      for (int i = reduced.n() - 1; i >= 0; --i) {
        if (!f.is_zero(cur[i])) {
          pivot = i;
          break;
        }
      }
      reduced = homology::quotient_by_linear_form(reduced, cur);
      alive.erase(alive.begin() + pivot);
    }
    // dims of w * (0:J), w the product of the chosen variables
    auto ann = homology::annihilator(gens, n, f);
    auto spans =
        homology::degreewise_spans(ann, n, f, MonomialOrder::std_revlex);
    ExteriorElement w = ExteriorElement::term(n, f, product, f.one());
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i) {
      // dim (w * (0:J))_i : wedge w against a basis of (0:J)_{i-k}
      int src = i - k;
      int got = 0;
      if (src >= 0 && src <= n) {
        std::vector<la::SparseMatrix::Row> rows;
        auto target_basis = exterior::graded_basis(n, i, MonomialOrder::std_revlex);
        for (int rr = 0; rr < spans.span[src].rank(); ++rr) {
          ExteriorElement x = ExteriorElement::from_coords(
              n, f, spans.basis[src], spans.span[src].reduced.row(rr));
          ExteriorElement wx = exterior::wedge(w, x);
          if (!wx.is_zero()) rows.push_back(wx.coords(target_basis));
        }
        la::SparseMatrix mat(f, static_cast<int>(rows.size()),
                             static_cast<int>(target_basis.size()));
        for (std::size_t rr = 0; rr < rows.size(); ++rr) {
          mat.set_row(static_cast<int>(rr), std::move(rows[rr]));
        }
        got = la::rank(mat);
      }
      int want = reduced.dim(n - i);
      if (got != want) ok = false;
    }
    out.push_back(ok ? pass("dual-mod-regular", inst.name)
                     : fail("dual-mod-regular", inst.name,
                            "dims of (M/vM)* equal dims of w(0:J)", "mismatch"));
  }
  return out;
}

std::vector<CheckResult> check_gin(const RunConfig& cfg) {
  const Field& f = cfg.field;
  std::vector<CheckResult> out;

  // ini under the large-index order is the broken circuit ideal
  auto bc_checks =
      map_instances(corpus::loopless_corpus(8), [&](const Instance& inst) {
        std::vector<CheckResult> r;
        auto ini = groebner::initial_ideal(os_gens(inst.m, f), inst.m.n(), f,
                                           MonomialOrder::rev_compat);
        auto bc = osalg::broken_circuit_ideal(inst.m);
        r.push_back(ini == bc
                        ? pass("ini-broken-circuit", inst.name)
                        : fail("ini-broken-circuit", inst.name, bc.str(),
                               ini.str()));
        return r;
      });
  out.insert(out.end(), bc_checks.begin(), bc_checks.end());

  // full comparison suite per instance
  auto suite_checks =
      map_instances(corpus::loopless_corpus(6), [&](const Instance& inst) {
        std::vector<CheckResult> r;
        auto gens = os_gens(inst.m, f);
        int n = inst.m.n();
        try {
          auto gin_j = groebner::gin(gens, n, f, 3, cfg.seed);
          r.push_back(monomial::is_strongly_stable(gin_j)
                          ? pass("gin-strongly-stable", inst.name)
                          : fail("gin-strongly-stable", inst.name,
                                 "strongly stable", gin_j.str()));
          // seeds 1..3 agree
          bool seeds_ok = true;
          for (std::uint64_t s = 1; s <= 3; ++s) {
            if (groebner::gin(gens, n, f, 3, s) != gin_j) seeds_ok = false;
          }
          r.push_back(seeds_ok ? pass("gin-seed-stable", inst.name)
                               : fail("gin-seed-stable", inst.name,
                                      "same gin for seeds 1..3", "disagree"));
          auto report =
              groebner::gin_theorem_suite(gens, n, f, std::min(cfg.imax, 3),
                                          cfg.seed, cfg.trials);
          auto push = [&](bool ok, const char* law) {
            r.push_back(ok ? pass(law, inst.name)
                           : fail(law, inst.name, "holds",
                                  report.failures.empty()
                                      ? "violated"
                                      : report.failures.front()));
          };
          push(report.dual_ini && report.dual_gin, "dual-gin");
          push(report.betti_monotone, "betti-monotone-ini");
          push(report.mu_monotone, "mu-monotone-ini");
          push(report.depth_transfer && report.cx_transfer, "depth-cx-transfer");
          push(report.hilbert_preserved, "gin-hilbert");
          // d(E/gin J) from the generator formula vs direct top degree
          if (!gin_j.is_zero()) {
            int d_formula = monomial::d_quotient(gin_j);
            int d_direct = monomial::d_quotient_direct(gin_j);
            int d_module = homology::module_from_quotient(
                               groebner::monomial_generators(gin_j, f), n, f)
                               .top_degree();
            bool d_ok = d_formula == d_direct && d_formula == d_module;
            r.push_back(d_ok ? pass("gin-cx-d-formulas", inst.name)
                             : fail("gin-cx-d-formulas", inst.name,
                                    "n - max min(u) = top degree",
                                    std::to_string(d_formula) + " vs " +
                                        std::to_string(d_direct) + " vs " +
                                        std::to_string(d_module)));
          }
        } catch (const groebner::GenericityError& e) {
          r.push_back(generic_fail("gin-strongly-stable", inst.name, e.what()));
        }
        return r;
      });
  out.insert(out.end(), suite_checks.begin(), suite_checks.end());

  // gin is empirically idempotent
  auto idem_checks =
      map_instances(corpus::loopless_corpus(5), [&](const Instance& inst) {
        std::vector<CheckResult> r;
        try {
          auto gin_j = groebner::gin(os_gens(inst.m, f), inst.m.n(), f, 3,
                                     cfg.seed);
          auto gin2 = groebner::gin(groebner::monomial_generators(gin_j, f),
                                    inst.m.n(), f, 3, cfg.seed + 7);
          r.push_back(gin2 == gin_j
                          ? pass("gin-idempotent", inst.name)
                          : fail("gin-idempotent", inst.name, gin_j.str(),
                                 gin2.str()));
        } catch (const groebner::GenericityError& e) {
          r.push_back(generic_fail("gin-idempotent", inst.name, e.what()));
        }
        return r;
      });
  out.insert(out.end(), idem_checks.begin(), idem_checks.end());

  // reduction of a uniform OS ideal modulo e_1
  for (int n = 2; n <= 6; ++n) {
    for (int m = 1; m < n; ++m) {
      auto gens = os_gens(Matroid::uniform(m, n), f);
      gens.push_back(ExteriorElement::variable(n, f, 1));
      std::vector<ExteriorElement> rhs = {ExteriorElement::variable(n, f, 1)};
      for (exterior::Monomial u :
           exterior::graded_basis(n, m, MonomialOrder::std_revlex)) {
        if (u & 1) continue;  // only A inside {2..n}
        rhs.push_back(ExteriorElement::term(n, f, u, f.one()));
      }
      auto lhs_spans = homology::degreewise_spans(gens, n, f, cfg.order);
      auto rhs_spans = homology::degreewise_spans(rhs, n, f, cfg.order);
      bool ok = true;
      for (int d = 0; d <= n; ++d) {
        if (!(lhs_spans.span[d].reduced == rhs_spans.span[d].reduced)) ok = false;
      }
      std::string name = "U(" + std::to_string(m) + "," + std::to_string(n) + ")";
      out.push_back(ok ? pass("uniform-reduction", name)
                       : fail("uniform-reduction", name,
                              "equal degreewise spans", "mismatch"));
    }
  }
  return out;
}

std::vector<CheckResult> check_duality(const RunConfig& cfg) {
  const Field& f = cfg.field;
  std::vector<CheckResult> out;

  auto per_instance =
      map_instances(corpus::loopless_corpus(6), [&](const Instance& inst) {
        std::vector<CheckResult> r;
        int n = inst.m.n();
        auto gens = os_gens(inst.m, f);
        auto quotient = homology::module_from_quotient(gens, n, f);
        auto ann = homology::annihilator(gens, n, f);
        auto dual = homology::module_from_ideal(ann, n, f);

        bool dims_ok = true;
        for (int i = 0; i <= n; ++i) {
          if (dual.dim(i) != quotient.dim(n - i)) dims_ok = false;
        }
        r.push_back(dims_ok ? pass("duality-dims", inst.name)
                            : fail("duality-dims", inst.name,
                                   "dim (0:J)_i = dim (E/J)_{n-i}",
                                   dual.hilbert().str() + " vs " +
                                       quotient.hilbert().str()));

        auto depth_q = homology::depth(quotient, cfg.trials, cfg.seed);
        auto depth_d = homology::depth(dual, cfg.trials, cfg.seed);
        r.push_back(depth_q.value == depth_d.value
                        ? pass("depth-dual", inst.name)
                        : fail("depth-dual", inst.name,
                               std::to_string(depth_q.value),
                               std::to_string(depth_d.value)));

        // Bass numbers: annihilator route vs cocomplex route
        if (n <= 5) {
          auto via_dual = homology::bass_table(gens, n, f, std::min(cfg.imax, 3));
          auto via_cocomplex =
              homology::bass_table_cocomplex(quotient, std::min(cfg.imax, 3));
          r.push_back(via_dual == via_cocomplex
                          ? pass("bass-two-routes", inst.name)
                          : fail("bass-two-routes", inst.name,
                                 via_dual.str("mu"), via_cocomplex.str("mu")));
        }
        return r;
      });
  out.insert(out.end(), per_instance.begin(), per_instance.end());

  // double annihilator on monomial corpus ideals
  {
    std::vector<std::pair<std::string, monomial::MonomialIdeal>> ideals;
    for (const Instance& inst : corpus::loopless_corpus(6)) {
      ideals.push_back({"bc(" + inst.name + ")",
                        osalg::broken_circuit_ideal(inst.m)});
    }
    for (int n = 2; n <= 5; ++n) {
      for (int t = 1; t <= n; ++t) {
        ideals.push_back({"m^" + std::to_string(t) + " n=" + std::to_string(n),
                          monomial::power_ideal(n, t)});
      }
    }
    ideals.push_back({"counterexample",
                      monomial::MonomialIdeal::make(
                          4, {exterior::monomial_from_indices(4, {1, 2}),
                              exterior::monomial_from_indices(4, {1, 3}),
                              exterior::monomial_from_indices(4, {1, 4}),
                              exterior::monomial_from_indices(4, {2, 3, 4})})});
    long long bad = 0;
    std::string witness;
    for (const auto& [name, j] : ideals) {
      if (monomial::annihilator_monomial(monomial::annihilator_monomial(j)) !=
          j) {
        ++bad;
        witness = name;
      }
      // generic annihilator route agrees with the combinatorial one
      auto generic = homology::annihilator(
          groebner::monomial_generators(j, f), j.n(), f);
      std::vector<exterior::Monomial> got;
      bool monomials = true;
      for (const auto& g : generic) {
        if (g.terms().size() != 1) {
          monomials = false;
          break;
        }
        got.push_back(g.terms().begin()->first);
      }
      if (!monomials ||
          monomial::MonomialIdeal::make(j.n(), got) !=
              monomial::annihilator_monomial(j)) {
        ++bad;
        witness = name + " (generic route)";
      }
    }
    out.push_back(bad == 0 ? pass("double-annihilator", "monomial corpus")
                           : fail("double-annihilator", witness, "0:(0:J) = J",
                                  "mismatch"));
  }

  // Cartan homology/cohomology duality on a few instances, random sequences
  {
    std::mt19937_64 rng(cfg.seed);
    long long bad = 0;
    for (const Instance& inst : {corpus::loopless_corpus(4)[0],
                                 Instance{"U(2,4)", Matroid::uniform(2, 4)},
                                 Instance{"rank3-two-triples(5)",
                                          corpus::rank3_two_triples()}}) {
      int n = inst.m.n();
      auto gens = os_gens(inst.m, f);
      auto m = homology::module_from_quotient(gens, n, f);
      auto dual = homology::module_from_ideal(
          homology::annihilator(gens, n, f), n, f);
      std::vector<std::vector<Scalar>> v;
      for (int k = 0; k < 2; ++k) {
        std::vector<Scalar> coords(n, f.zero());
        for (auto& c : coords) c = f.random(rng);
        v.push_back(std::move(coords));
      }
      auto hom = homology::cartan_homology(v, m, 2);
      auto coh = homology::cartan_cohomology(v, dual, 2);
      for (int i = 0; i <= 2; ++i) {
        for (int d = -n; d <= 2 * n; ++d) {
          if (hom[i].at(d) != coh[i].at(n - d)) ++bad;
        }
      }
    }
    out.push_back(bad == 0 ? pass("cartan-co-hom", "3 instances, random v")
                           : fail("cartan-co-hom", "3 instances", "0",
                                  std::to_string(bad)));
  }
  return out;
}

std::vector<CheckResult> check_classification(const RunConfig& cfg) {
  const Field& f = cfg.field;
  std::vector<CheckResult> out;
  std::vector<Instance> zoo = corpus::loopless_corpus(6);
  for (const auto& inst : corpus::loop_corpus()) zoo.push_back(inst);

  auto per_instance = map_instances(zoo, [&](const Instance& inst) {
    std::vector<CheckResult> r;
    int n = inst.m.n();
    auto cls = classify::classify_linear_resolution(inst.m);
    auto gens = os_gens(inst.m, f);
    bool loop = inst.m.has_loops();
    if (loop) {
      // J = E: the free ideal is 0-linear
      gens = {ExteriorElement::unit(n, f)};
    }
    auto ideal = homology::module_from_ideal(gens, n, f);
    if (ideal.is_zero()) {
      // zero ideal: structurally classified as the free matroid case
      r.push_back(cls.is_linear()
                      ? pass("classification-soundness", inst.name + " (J=0)")
                      : fail("classification-soundness", inst.name, "linear",
                             "not-linear"));
      return r;
    }
    auto betti = homology::betti_table(ideal, 4);
    int diag = -2;
    bool concentrated = true;
    for (const auto& [key, v] : betti.entries) {
      if (v == 0) continue;
      if (diag == -2) {
        diag = key.second - key.first;
      } else if (key.second - key.first != diag) {
        concentrated = false;
      }
    }
    bool ok = concentrated == cls.is_linear() &&
              (!cls.is_linear() || diag == cls.m);
    r.push_back(ok ? pass("classification-soundness", inst.name)
                   : fail("classification-soundness", inst.name,
                          cls.is_linear()
                              ? "concentrated on " + std::to_string(cls.m)
                              : "spread",
                          concentrated ? "concentrated on " + std::to_string(diag)
                                       : "spread"));

    if (!loop) {
      try {
        auto inv = homology::invariants(gens, n, f, cfg.imax, cfg.seed,
                                        cfg.trials);
        auto predicted = classify::predicted_invariants(inst.m);
        bool agree = inv.depth == predicted.depth && inv.cx == predicted.cx &&
                     inv.reg == predicted.reg && inv.d == predicted.d &&
                     inv.depth_consistent;
        r.push_back(agree
                        ? pass("predicted-invariants", inst.name)
                        : fail("predicted-invariants", inst.name,
                               fmt_tuple({predicted.depth, predicted.cx,
                                          predicted.reg, predicted.d}),
                               fmt_tuple({inv.depth, inv.cx, inv.reg, inv.d})));
      } catch (const groebner::GenericityError& e) {
        r.push_back(generic_fail("predicted-invariants", inst.name, e.what()));
      }
      // closed-form Betti on the linear classes
      if (cls.is_linear() && !inst.m.circuits().empty()) {
        bool agree = true;
        std::string expected, got;
        for (int i = 0; i <= 4 && agree; ++i) {
          auto predicted = classify::predicted_betti(inst.m, i);
          if (!predicted || betti.total(i) != *predicted) {
            agree = false;
            expected = predicted ? std::to_string(*predicted) : "class";
            got = std::to_string(betti.total(i));
          }
        }
        r.push_back(agree ? pass("predicted-betti", inst.name)
                          : fail("predicted-betti", inst.name, expected, got));
      }
      // linear relations force connectedness
      auto elems = inst.m.classify_elements();
      if (elems.is_simple && elems.coloops.empty() &&
          !inst.m.circuits().empty()) {
        int m0 = -1;
        bool relations_linear = true;
        for (const auto& [key, v] : betti.entries) {
          if (v == 0 || key.first > 1) continue;
          if (key.first == 0) {
            if (m0 == -1) m0 = key.second;
            if (key.second != m0) relations_linear = false;
          }
        }
        for (const auto& [key, v] : betti.entries) {
          if (v == 0 || key.first != 1) continue;
          if (key.second != m0 + 1) relations_linear = false;
        }
        bool ok2 = !relations_linear || inst.m.is_connected();
        r.push_back(ok2 ? pass("linear-relations-connected", inst.name)
                        : fail("linear-relations-connected", inst.name,
                               "connected", "disconnected with linear "
                                            "relations"));
      }
    }
    return r;
  });
  out.insert(out.end(), per_instance.begin(), per_instance.end());

  // the rank-3 profile matches the tabulated invariants
  {
    struct ProfileRow {
      std::string name;
      Matroid m;
      classify::Rank3Profile profile;
    };
    std::vector<ProfileRow> rows = {
        {"U(2,5)", Matroid::uniform(2, 5), classify::Rank3Profile::pencil},
        {"U(2,4)+U(1,1)",
         Matroid::direct_sum(Matroid::uniform(2, 4), Matroid::uniform(1, 1)),
         classify::Rank3Profile::near_pencil},
        {"U(3,3)", Matroid::uniform(3, 3), classify::Rank3Profile::near_pencil},
        {"rank3-one-triple(5)", corpus::rank3_one_triple(),
         classify::Rank3Profile::other_simple_rank3},
        {"rank3-two-triples(5)", corpus::rank3_two_triples(),
         classify::Rank3Profile::other_simple_rank3},
    };
    long long bad = 0;
    std::string witness;
    for (const auto& row : rows) {
      if (classify::rank3_profile(row.m) != row.profile) {
        ++bad;
        witness = row.name;
      }
    }
    out.push_back(bad == 0 ? pass("rank3-table", "profiles")
                           : fail("rank3-table", witness, "profile", "other"));
  }
  return out;
}

std::vector<std::string> suite_names() {
  return {"exactla", "exterior", "matroid", "hilbert", "betti",
          "linear",  "gin",      "duality", "classify", "all"};
}

bool is_suite(const std::string& name) {
  for (const auto& s : suite_names()) {
    if (s == name) return true;
  }
  return false;
}

std::vector<CheckResult> run_suite(const std::string& name,
                                   const RunConfig& cfg) {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> part) {
    out.insert(out.end(), part.begin(), part.end());
  };
  bool all = name == "all";
  if (all || name == "exactla") append(check_exactla(cfg, 1000));
  if (all || name == "exterior") append(check_exterior_axioms(cfg, 1000));
  if (all || name == "matroid") append(check_matroid_axioms(cfg, 1000));
  if (all || name == "hilbert") {
    append(check_hilbert(cfg));
    append(check_hilbert_factorization(cfg));
  }
  if (all || name == "betti") append(check_betti_formulas(cfg));
  if (all || name == "linear") {
    append(check_uniform_invariants(cfg));
    append(check_rank3_table(cfg));
    append(check_linear_injective(cfg));
    append(check_regularity(cfg));
  }
  if (all || name == "gin") append(check_gin(cfg));
  if (all || name == "duality") append(check_duality(cfg));
  if (all || name == "classify") append(check_classification(cfg));
  if (out.empty() && !is_suite(name)) {
    throw std::invalid_argument("unknown verify suite: " + name);
  }
  return out;
}

Summary summarize(const std::vector<CheckResult>& results) {
  Summary s;
  for (const auto& r : results) {
    switch (r.status) {
      case Status::pass:
        ++s.passed;
        break;
      case Status::fail:
        ++s.failed;
        break;
      case Status::genericity:
        ++s.genericity;
        break;
    }
  }
  return s;
}

}  // namespace osforge::verify
