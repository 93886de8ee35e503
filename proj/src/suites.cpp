#include "sympclif/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "sympclif/bases.hpp"
#include "sympclif/linalg.hpp"
#include "sympclif/oplib.hpp"
#include "sympclif/pairing.hpp"
#include "sympclif/spectral.hpp"
#include "sympclif/symmetry.hpp"

namespace sympclif {

namespace {

struct Check {
    std::string id;
    std::string anchor;
    std::function<bool(std::string&)> fn;
};

int thread_budget(const SuiteParams& p) {
    if (p.threads > 0) return p.threads;
    if (const char* env = std::getenv("SYMPCLIF_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::vector<CheckResult> run_checks(const std::string& suite, std::vector<Check> checks,
                                    const SuiteParams& params) {
    int budget = thread_budget(params);
    std::vector<CheckResult> results(checks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= checks.size()) break;
            CheckResult r;
            r.suite = suite;
            r.check_id = checks[i].id;
            r.anchor = checks[i].anchor;
            try {
                r.pass = checks[i].fn(r.detail);
            } catch (const std::exception& e) {
                r.pass = false;
                r.detail = std::string("exception: ") + e.what();
            }
            results[i] = std::move(r);
        }
    };
    int nthreads = std::min<int>(budget, static_cast<int>(checks.size()));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
        return std::tie(a.suite, a.check_id) < std::tie(b.suite, b.check_id);
    });
    return results;
}

// ---- shared corpus helpers ----

Spinor embed_slot(const Spinor& s, int slot, int n) {
    Spinor out(n);
    for (const auto& [m, c] : s.terms) {
        SMono mm(3 * n, 0);
        mm[slot - 1] = m[0];
        mm[n + slot - 1] = m[1];
        mm[2 * n + slot - 1] = m[2];
        out.add_term(mm, c);
    }
    return out;
}

WeylElement z_corollary(int l) {
    // the n = 1 raising operators in the sign convention of the commutator tables
    return -build(OpName(OpKind::Zreal, l), 1);
}

bool spinor_zero_detail(const Spinor& s, std::string& detail) {
    if (s.is_zero()) return true;
    detail = "nonzero remainder: " + s.str();
    return false;
}

bool weyl_equal_detail(const WeylElement& got, const WeylElement& want, std::string& detail) {
    if (got == want) return true;
    detail = "got " + got.str() + " ; expected " + want.str();
    return false;
}

std::mt19937_64 seeded(std::uint64_t s) { return std::mt19937_64(s); }

WeylElement random_weyl(std::mt19937_64& rng, int n, int nterms, int deg) {
    std::uniform_int_distribution<int> dcoef(-3, 3);
    std::uniform_int_distribution<int> dvar(0, 6 * n - 1);
    std::uniform_int_distribution<int> ddeg(0, deg);
    WeylElement w(n);
    for (int t = 0; t < nterms; ++t) {
        Mono m(6 * n, 0);
        int d = ddeg(rng);
        for (int i = 0; i < d; ++i) m[dvar(rng)] += 1;
        GaussRat c{make_rat(dcoef(rng)), make_rat(dcoef(rng))};
        if (c.is_zero()) c = GaussRat::of(1);
        w.add_term(m, Scalar::of_gauss(c));
    }
    return w;
}

Spinor random_spinor(std::mt19937_64& rng, int n, int nterms, int deg) {
    std::uniform_int_distribution<int> dcoef(-3, 3);
    std::uniform_int_distribution<int> dvar(0, 3 * n - 1);
    std::uniform_int_distribution<int> ddeg(0, deg);
    Spinor s(n);
    for (int t = 0; t < nterms; ++t) {
        SMono m(3 * n, 0);
        int d = ddeg(rng);
        for (int i = 0; i < d; ++i) m[dvar(rng)] += 1;
        GaussRat c{make_rat(dcoef(rng)), make_rat(dcoef(rng))};
        if (c.is_zero()) c = GaussRat::of(1);
        s.add_term(m, Scalar::of_gauss(c));
    }
    return s;
}

}  // namespace

std::vector<Spinor> monogenic_corpus(int n, int h) {
    std::vector<Spinor> out;
    if (n == 1) {
        for (int k = 0; k <= 2; ++k) out.push_back(basis_real(Parity::Even, h, k));
        out.push_back(basis_real(Parity::Odd, h, h));
        out.push_back(basis_real(Parity::Odd, h, h + 1));
        out.push_back(basis_complex_rescaled(Parity::Even, h, 0));
        return out;
    }
    if (n == 2) {
        // products of slot monogenics are monogenic: the slots commute and the
        // Gaussian weight splits
        for (int h1 = 0; h1 <= h; ++h1) {
            int h2 = h - h1;
            Spinor a = h1 ? basis_real(Parity::Even, h1, 1) : basis_real(Parity::Even, 0, 1);
            Spinor b = h2 ? basis_real(Parity::Odd, h2, h2) : basis_real(Parity::Even, 0, 0);
            out.push_back(poly_mul(embed_slot(a, 1, 2), embed_slot(b, 2, 2)));
        }
        return out;
    }
    throw std::invalid_argument("monogenic_corpus: n must be 1 or 2");
}

namespace {

// ------------------------- commutators suite -------------------------

std::vector<Check> commutator_checks(const SuiteParams& p) {
    std::vector<Check> cs;
    int nmax = std::min(p.n_max, 3);
    for (int n = 1; n <= nmax; ++n) {
        std::string ns = std::to_string(n);
        cs.push_back({"sl2-a-n" + ns, "[E+n,Ds] = -Ds (n=" + ns + ")", [n](std::string& d) {
                          WeylElement D = build(OpKind::Ds, n);
                          return weyl_equal_detail(commutator(euler_shifted(n), D), -D, d);
                      }});
        cs.push_back({"sl2-b-n" + ns, "[E+n,Xs] = Xs (n=" + ns + ")", [n](std::string& d) {
                          WeylElement X = build(OpKind::Xs, n);
                          return weyl_equal_detail(commutator(euler_shifted(n), X), X, d);
                      }});
        cs.push_back({"sl2-c-n" + ns, "[Xs,Ds] = i(E+n) (n=" + ns + ")", [n](std::string& d) {
                          WeylElement X = build(OpKind::Xs, n), D = build(OpKind::Ds, n);
                          return weyl_equal_detail(commutator(X, D), euler_shifted(n) * Scalar::i(), d);
                      }});
        cs.push_back({"invariance-n" + ns,
                      "[g,Ds]=[g,Xs]=[g,E]=0 for all metaplectic generators (n=" + ns + ")",
                      [n](std::string& d) {
                          WeylElement D = build(OpKind::Ds, n), X = build(OpKind::Xs, n),
                                      E = build(OpKind::E, n);
                          for (const auto& g : sp_generators(n)) {
                              WeylElement og = build(g, n);
                              for (const WeylElement* t : {&D, &X, &E}) {
                                  if (!commutator(og, *t).is_zero()) {
                                      d = "fails for " + op_spelling(g);
                                      return false;
                                  }
                              }
                          }
                          return true;
                      }});
        cs.push_back({"sp-bracket-table-n" + ns,
                      "[psi(A),psi(B)] = -psi([A,B]) against exact matrix brackets (n=" + ns + ")",
                      [n](std::string& d) {
                          auto gens = sp_generators(n);
                          for (const auto& a : gens) {
                              WeylElement oa = sp_op_twisted(a, n);
                              for (const auto& b : gens) {
                                  RatMatrix mc = mat_commutator(sp_matrix(a, n), sp_matrix(b, n));
                                  std::vector<Rat> coeffs = mat_expand(mc, gens, n);
                                  WeylElement want(n);
                                  for (size_t i = 0; i < gens.size(); ++i)
                                      if (coeffs[i] != 0)
                                          want += sp_op_twisted(gens[i], n) * Scalar::of_rat(-coeffs[i]);
                                  if (commutator(oa, sp_op_twisted(b, n)) != want) {
                                      d = "fails for [" + op_spelling(a) + "," + op_spelling(b) + "]";
                                      return false;
                                  }
                              }
                          }
                          return true;
                      }});
    }
    // real-coordinate metaplectic triple (n = 1)
    cs.push_back({"mp2-real", "[Xtilde,Ytilde]=Htilde, [Htilde,Xtilde]=2Xtilde, [Htilde,Ytilde]=-2Ytilde",
                  [](std::string& d) {
                      WeylElement X = build(OpKind::Xtilde, 1), Y = build(OpKind::Ytilde, 1),
                                  H = build(OpKind::Htilde, 1);
                      return weyl_equal_detail(commutator(X, Y), H, d) &&
                             weyl_equal_detail(commutator(H, X), X * Scalar::of(2), d) &&
                             weyl_equal_detail(commutator(H, Y), Y * Scalar::of(-2), d);
                  }});
    cs.push_back({"mp2-real-invariance", "Ds, Xs, E commute with Xtilde, Ytilde, Htilde",
                  [](std::string& d) {
                      for (OpKind g : {OpKind::Xtilde, OpKind::Ytilde, OpKind::Htilde})
                          for (OpKind t : {OpKind::Ds, OpKind::Xs, OpKind::E})
                              if (!commutator(build(g, 1), build(t, 1)).is_zero()) {
                                  d = "fails for " + op_spelling(OpName(g));
                                  return false;
                              }
                      return true;
                  }});
    cs.push_back({"mp2-holo", "[Xt,Yt]=Ht, [Ht,Xt]=2Xt, [Ht,Yt]=-2Yt", [](std::string& d) {
                      WeylElement X = build(OpKind::Xt, 1), Y = build(OpKind::Yt, 1),
                                  H = build(OpKind::Ht, 1);
                      return weyl_equal_detail(commutator(X, Y), H, d) &&
                             weyl_equal_detail(commutator(H, X), X * Scalar::of(2), d) &&
                             weyl_equal_detail(commutator(H, Y), Y * Scalar::of(-2), d);
                  }});
    cs.push_back({"mp2-holo-invariance", "Ds, Xs, E commute with Ht, Xt, Yt", [](std::string& d) {
                      for (OpKind g : {OpKind::Ht, OpKind::Xt, OpKind::Yt})
                          for (OpKind t : {OpKind::Ds, OpKind::Xs, OpKind::E})
                              if (!commutator(build(g, 1), build(t, 1)).is_zero()) {
                                  d = "fails for " + op_spelling(OpName(g));
                                  return false;
                              }
                      return true;
                  }});
    // real-coordinate Z table
    cs.push_back({"ztable-real-dz", "[dx,Z_1]=-2i Xtilde(2E+1) and companions", [](std::string& d) {
                      WeylElement Z1 = z_corollary(1), Z2 = z_corollary(2);
                      WeylElement dx = WeylElement::generator(Gen::Dx, 1, 1);
                      WeylElement dy = WeylElement::generator(Gen::Dy, 1, 1);
                      WeylElement Xt = build(OpKind::Xtilde, 1), Yt = build(OpKind::Ytilde, 1),
                                  Ht = build(OpKind::Htilde, 1);
                      WeylElement XsDs = build(OpKind::Xs, 1) * build(OpKind::Ds, 1);
                      WeylElement twoE = build(OpKind::E, 1) * Scalar::of(2) + WeylElement::unit(1);
                      Scalar i = Scalar::i();
                      bool ok = weyl_equal_detail(commutator(dx, Z1), Xt * twoE * (i * Scalar::of(-2)), d) &&
                                weyl_equal_detail(commutator(dy, Z1),
                                                  XsDs * Scalar::of(2) + Ht * twoE * i + twoE * twoE * i +
                                                      WeylElement::unit(1, i * Scalar::of(1, 2)),
                                                  d) &&
                                weyl_equal_detail(commutator(dx, Z2),
                                                  XsDs * Scalar::of(-2) + Ht * twoE * i - twoE * twoE * i -
                                                      WeylElement::unit(1, i * Scalar::of(1, 2)),
                                                  d) &&
                                weyl_equal_detail(commutator(dy, Z2), Yt * twoE * (i * Scalar::of(2)), d);
                      return ok;
                  }});
    cs.push_back({"ztable-real-z1z2", "[Z_1,Z_2] = 0", [](std::string& d) {
                      return weyl_equal_detail(commutator(z_corollary(1), z_corollary(2)),
                                               WeylElement::zero(1), d);
                  }});
    cs.push_back({"ztable-real-mp2",
                  "[Z,{Htilde,Xtilde,Ytilde,E}] table; note [Ytilde,Z_1]=Z_2 (the displayed "
                  "[Z_1,Ytilde]=Z_2 has the arguments transposed)",
                  [](std::string& d) {
                      WeylElement Z1 = z_corollary(1), Z2 = z_corollary(2);
                      WeylElement Xt = build(OpKind::Xtilde, 1), Yt = build(OpKind::Ytilde, 1),
                                  Ht = build(OpKind::Htilde, 1), E = build(OpKind::E, 1);
                      return weyl_equal_detail(commutator(Z1, Ht), -Z1, d) &&
                             weyl_equal_detail(commutator(Z2, Ht), Z2, d) &&
                             weyl_equal_detail(commutator(Z1, Xt), WeylElement::zero(1), d) &&
                             weyl_equal_detail(commutator(Z2, Xt), -Z1, d) &&
                             weyl_equal_detail(commutator(Yt, Z1), Z2, d) &&
                             weyl_equal_detail(commutator(Z2, Yt), WeylElement::zero(1), d) &&
                             weyl_equal_detail(commutator(Z1, E), -Z1, d) &&
                             weyl_equal_detail(commutator(Z2, E), -Z2, d);
                  }});
    cs.push_back({"ztable-real-derivs", "[d,{Htilde,Xtilde,Ytilde,E}] table", [](std::string& d) {
                      WeylElement dx = WeylElement::generator(Gen::Dx, 1, 1);
                      WeylElement dy = WeylElement::generator(Gen::Dy, 1, 1);
                      WeylElement Xt = build(OpKind::Xtilde, 1), Yt = build(OpKind::Ytilde, 1),
                                  Ht = build(OpKind::Htilde, 1), E = build(OpKind::E, 1);
                      return weyl_equal_detail(commutator(dx, Ht), -dx, d) &&
                             weyl_equal_detail(commutator(dy, Ht), dy, d) &&
                             weyl_equal_detail(commutator(dx, Xt), WeylElement::zero(1), d) &&
                             weyl_equal_detail(commutator(dy, Xt), -dx, d) &&
                             weyl_equal_detail(commutator(dx, Yt), -dy, d) &&
                             weyl_equal_detail(commutator(dy, Yt), WeylElement::zero(1), d) &&
                             weyl_equal_detail(commutator(dx, E), dx, d) &&
                             weyl_equal_detail(commutator(dy, E), dy, d);
                  }});
    cs.push_back({"ztable-holo-dz", "[Z1,dz]=2i Xt(2E+1) and companions", [](std::string& d) {
                      WeylElement Z1 = build(OpKind::Z1, 1), Z2 = build(OpKind::Z2, 1);
                      WeylElement dz = build(OpKind::Dz, 1), dzb = build(OpKind::Dzbar, 1);
                      WeylElement Xt = build(OpKind::Xt, 1), Yt = build(OpKind::Yt, 1),
                                  Ht = build(OpKind::Ht, 1);
                      WeylElement XsDs = build(OpKind::Xs, 1) * build(OpKind::Ds, 1);
                      WeylElement twoE = build(OpKind::E, 1) * Scalar::of(2) + WeylElement::unit(1);
                      Scalar i = Scalar::i();
                      return weyl_equal_detail(commutator(Z1, dz), Xt * twoE * (i * Scalar::of(2)), d) &&
                             weyl_equal_detail(commutator(Z1, dzb),
                                               XsDs * (i * Scalar::of(2)) - Ht * twoE - twoE * twoE -
                                                   WeylElement::unit(1, Scalar::of(1, 2)),
                                               d) &&
                             weyl_equal_detail(commutator(Z2, dz),
                                               XsDs * (i * Scalar::of(-2)) - Ht * twoE + twoE * twoE +
                                                   WeylElement::unit(1, Scalar::of(1, 2)),
                                               d) &&
                             weyl_equal_detail(commutator(Z2, dzb), Yt * twoE * (i * Scalar::of(2)), d) &&
                             weyl_equal_detail(commutator(Z1, Z2), WeylElement::zero(1), d);
                  }});
    cs.push_back({"ztable-holo-mp2", "[Z,{Ht,Xt,Yt,E}] table (complex coordinates)",
                  [](std::string& d) {
                      WeylElement Z1 = build(OpKind::Z1, 1), Z2 = build(OpKind::Z2, 1);
                      WeylElement Xt = build(OpKind::Xt, 1), Yt = build(OpKind::Yt, 1),
                                  Ht = build(OpKind::Ht, 1), E = build(OpKind::E, 1);
                      Scalar i = Scalar::i();
                      return weyl_equal_detail(commutator(Z1, Ht), -Z1, d) &&
                             weyl_equal_detail(commutator(Z2, Ht), Z2, d) &&
                             weyl_equal_detail(commutator(Z1, Xt), WeylElement::zero(1), d) &&
                             weyl_equal_detail(commutator(Z2, Xt), Z1 * i, d) &&
                             weyl_equal_detail(commutator(Z1, Yt), Z2 * (-i), d) &&
                             weyl_equal_detail(commutator(Z2, Yt), WeylElement::zero(1), d) &&
                             weyl_equal_detail(commutator(Z1, E), -Z1, d) &&
                             weyl_equal_detail(commutator(Z2, E), -Z2, d);
                  }});
    cs.push_back({"ztable-holo-derivs", "[dz,{Ht,Xt,Yt,E}] table (complex coordinates)",
                  [](std::string& d) {
                      WeylElement dz = build(OpKind::Dz, 1), dzb = build(OpKind::Dzbar, 1);
                      WeylElement Xt = build(OpKind::Xt, 1), Yt = build(OpKind::Yt, 1),
                                  Ht = build(OpKind::Ht, 1), E = build(OpKind::E, 1);
                      Scalar i = Scalar::i();
                      return weyl_equal_detail(commutator(dz, Ht), -dz, d) &&
                             weyl_equal_detail(commutator(dzb, Ht), dzb, d) &&
                             weyl_equal_detail(commutator(dz, Xt), WeylElement::zero(1), d) &&
                             weyl_equal_detail(commutator(dzb, Xt), dz * i, d) &&
                             weyl_equal_detail(commutator(dz, Yt), dzb * (-i), d) &&
                             weyl_equal_detail(commutator(dzb, Yt), WeylElement::zero(1), d) &&
                             weyl_equal_detail(commutator(dz, E), dz, d) &&
                             weyl_equal_detail(commutator(dzb, E), dzb, d);
                  }});
    for (int n = 1; n <= std::min(p.n_max, 2); ++n) {
        std::string ns = std::to_string(n);
        cs.push_back({"z-equivariance-n" + ns,
                      "[psi(A), Z_l] = sum_m A[l,m] Z_m (fundamental representation, n=" + ns + ")",
                      [n](std::string& d) {
                          auto gens = sp_generators(n);
                          std::vector<WeylElement> zv;
                          for (int l = 1; l <= 2 * n; ++l) zv.push_back(build(OpName(OpKind::Zreal, l), n));
                          for (const auto& g : gens) {
                              RatMatrix M = sp_matrix(g, n);
                              WeylElement op = sp_op_twisted(g, n);
                              for (int l = 0; l < 2 * n; ++l) {
                                  WeylElement want(n);
                                  for (int m = 0; m < 2 * n; ++m)
                                      if (M[l][m] != 0) want += zv[m] * Scalar::of_rat(M[l][m]);
                                  if (commutator(op, zv[l]) != want) {
                                      d = "fails for " + op_spelling(g) + ", l=" + std::to_string(l + 1);
                                      return false;
                                  }
                              }
                          }
                          return true;
                      }});
        cs.push_back({"d-equivariance-n" + ns,
                      "[psi(A), d_l] = sum_m A[l,m] d_m (fundamental representation, n=" + ns + ")",
                      [n](std::string& d) {
                          auto gens = sp_generators(n);
                          std::vector<WeylElement> dv;
                          for (int j = 1; j <= n; ++j) dv.push_back(WeylElement::generator(Gen::Dx, j, n));
                          for (int j = 1; j <= n; ++j) dv.push_back(WeylElement::generator(Gen::Dy, j, n));
                          for (const auto& g : gens) {
                              RatMatrix M = sp_matrix(g, n);
                              WeylElement op = sp_op_twisted(g, n);
                              for (int l = 0; l < 2 * n; ++l) {
                                  WeylElement want(n);
                                  for (int m = 0; m < 2 * n; ++m)
                                      if (M[l][m] != 0) want += dv[m] * Scalar::of_rat(M[l][m]);
                                  if (commutator(op, dv[l]) != want) {
                                      d = "fails for " + op_spelling(g) + ", l=" + std::to_string(l + 1);
                                      return false;
                                  }
                              }
                          }
                          return true;
                      }});
        cs.push_back({"z-proof-bracket-n" + ns,
                      "[Ds, Xs^2 dx_j] = -i Xs dx_j (2E+2n-1) (n=" + ns + ")", [n](std::string& d) {
                          WeylElement D = build(OpKind::Ds, n), X = build(OpKind::Xs, n);
                          WeylElement twoE = build(OpKind::E, n) * Scalar::of(2) +
                                             WeylElement::unit(n, Scalar::of(2 * n - 1));
                          for (int j = 1; j <= n; ++j) {
                              WeylElement dxj = WeylElement::generator(Gen::Dx, j, n);
                              WeylElement want = X * dxj * twoE * (-Scalar::i());
                              if (commutator(D, weyl_pow(X, 2) * dxj) != want) {
                                  d = "fails for j=" + std::to_string(j);
                                  return false;
                              }
                          }
                          return true;
                      }});
    }
    cs.push_back({"jacobi-random", "[[A,B],C] + [[B,C],A] + [[C,A],B] = 0 on random sparse elements",
                  [](std::string& d) {
                      auto rng = seeded(0x5ca1ab1e);
                      for (int trial = 0; trial < 40; ++trial) {
                          int n = 1 + (trial % 2);
                          WeylElement A = random_weyl(rng, n, 3, 2);
                          WeylElement B = random_weyl(rng, n, 3, 2);
                          WeylElement C = random_weyl(rng, n, 3, 2);
                          WeylElement jac = commutator(commutator(A, B), C) +
                                            commutator(commutator(B, C), A) +
                                            commutator(commutator(C, A), B);
                          if (!jac.is_zero()) {
                              d = "fails at trial " + std::to_string(trial);
                              return false;
                          }
                      }
                      return true;
                  }});
    cs.push_back({"degree-filtration", "order(A*B) <= order(A) + order(B) on random elements",
                  [](std::string& d) {
                      auto rng = seeded(0xf11c0de);
                      for (int trial = 0; trial < 60; ++trial) {
                          int n = 1 + (trial % 2);
                          WeylElement A = random_weyl(rng, n, 3, 3);
                          WeylElement B = random_weyl(rng, n, 3, 3);
                          if ((A * B).order() > A.order() + B.order()) {
                              d = "fails at trial " + std::to_string(trial);
                              return false;
                          }
                      }
                      return true;
                  }});
    return cs;
}

// ------------------------- bases suite -------------------------

std::vector<Check> bases_checks(const SuiteParams& p) {
    std::vector<Check> cs;
    const int hmax = p.h_max, kmax = p.k_max;
    cs.push_back({"kernel-real", "Ds b = 0 for the real-coordinate family", [hmax, kmax](std::string& d) {
                      WeylElement D = build(OpKind::Ds, 1);
                      for (int h = 0; h <= hmax; ++h) {
                          for (int k = h; k <= std::max(kmax, h); ++k)
                              if (!apply(D, basis_real(Parity::Odd, h, k)).is_zero()) {
                                  d = "odd h=" + std::to_string(h) + " k=" + std::to_string(k);
                                  return false;
                              }
                          for (int k = 0; k <= kmax; ++k)
                              if (!apply(D, basis_real(Parity::Even, h, k)).is_zero()) {
                                  d = "even h=" + std::to_string(h) + " k=" + std::to_string(k);
                                  return false;
                              }
                      }
                      return true;
                  }});
    cs.push_back({"kernel-complex", "Ds b = 0 for the rescaled complex family and the sE sums",
                  [hmax, kmax](std::string& d) {
                      WeylElement D = build(OpKind::Ds, 1);
                      for (int h = 0; h <= hmax; ++h) {
                          for (int k = 0; k <= kmax; ++k)
                              if (!apply(D, basis_complex_rescaled(Parity::Odd, h, k)).is_zero()) {
                                  d = "odd h=" + std::to_string(h) + " k=" + std::to_string(k);
                                  return false;
                              }
                          for (int k = -h; k <= kmax; ++k)
                              if (!apply(D, basis_complex_rescaled(Parity::Even, h, k)).is_zero()) {
                                  d = "even h=" + std::to_string(h) + " k=" + std::to_string(k);
                                  return false;
                              }
                          for (int l = 0; l <= 3; ++l)
                              if (!apply(D, basis_sE(h, l)).is_zero()) {
                                  d = "sE h=" + std::to_string(h) + " l=" + std::to_string(l);
                                  return false;
                              }
                      }
                      return true;
                  }});
    cs.push_back({"parity", "odd elements carry only odd fiber powers, even only even",
                  [hmax, kmax](std::string& d) {
                      for (int h = 0; h <= hmax; ++h) {
                          for (int k = h; k <= kmax + h; ++k)
                              for (const auto& [m, c] : basis_real(Parity::Odd, h, k).terms)
                                  if (m[2] % 2 == 0) { d = "real odd"; return false; }
                          for (int k = 0; k <= kmax; ++k)
                              for (const auto& [m, c] : basis_real(Parity::Even, h, k).terms)
                                  if (m[2] % 2) { d = "real even"; return false; }
                          for (int k = 0; k <= kmax; ++k)
                              for (const auto& [m, c] : basis_complex_rescaled(Parity::Odd, h, k).terms)
                                  if (m[2] % 2 == 0) { d = "complex odd"; return false; }
                          for (int k = -h; k <= kmax; ++k)
                              for (const auto& [m, c] : basis_complex_rescaled(Parity::Even, h, k).terms)
                                  if (m[2] % 2) { d = "complex even"; return false; }
                      }
                      return true;
                  }});
    cs.push_back({"independence", "basis coefficient matrices have full rank for h <= 4",
                  [kmax](std::string& d) {
                      for (int h = 0; h <= 4; ++h) {
                          std::vector<Spinor> fam;
                          for (int k = h; k <= kmax; ++k) fam.push_back(basis_real(Parity::Odd, h, k));
                          for (int k = 0; k <= kmax; ++k) fam.push_back(basis_real(Parity::Even, h, k));
                          std::map<SMono, int> col;
                          for (const auto& s : fam)
                              for (const auto& [m, c] : s.terms) col.emplace(m, 0);
                          int idx = 0;
                          for (auto& [m, c] : col) c = idx++;
                          SparseMatrix mat;
                          mat.ncols = idx;
                          for (int r = 0; r < static_cast<int>(fam.size()); ++r)
                              for (const auto& [m, c] : fam[r].terms)
                                  mat.add_entry(r, col[m], c.constant());
                          if (rank(std::move(mat)) != static_cast<int>(fam.size())) {
                              d = "rank deficiency at h=" + std::to_string(h);
                              return false;
                          }
                      }
                      return true;
                  }});
    cs.push_back({"recursion-real",
                  "coefficient recursion (dx + i dy) p_{j-1} = (j+1) dx p_{j+1} for the real family",
                  [hmax, kmax](std::string& d) {
                      for (int h = 0; h <= std::min(hmax, 4); ++h)
                          for (int k = h; k <= std::min(kmax, h + 3); ++k)
                              for (Parity par : {Parity::Odd, Parity::Even}) {
                                  if (par == Parity::Even && k > 3) continue;
                                  Spinor b = par == Parity::Odd ? basis_real(Parity::Odd, h, k)
                                                                : basis_real(Parity::Even, h, k);
                                  // split by fiber power
                                  std::map<int, Spinor> pj;
                                  for (const auto& [m, c] : b.terms) {
                                      auto it = pj.find(static_cast<int>(m[2]));
                                      if (it == pj.end()) it = pj.emplace(m[2], Spinor(1)).first;
                                      SMono mm = m;
                                      mm[2] = 0;
                                      it->second.add_term(mm, c);
                                  }
                                  int top = pj.empty() ? 0 : pj.rbegin()->first;
                                  for (int j = 0; j <= top + 1; ++j) {
                                      Spinor pjm = pj.count(j - 1) ? pj[j - 1] : Spinor(1);
                                      Spinor pjp = pj.count(j + 1) ? pj[j + 1] : Spinor(1);
                                      Spinor lhs = poly_derivative(pjm, Gen::X, 1) +
                                                   poly_derivative(pjm, Gen::Y, 1) * Scalar::i();
                                      Spinor rhs = poly_derivative(pjp, Gen::X, 1) * Scalar::of(j + 1);
                                      if (!(lhs == rhs)) {
                                          d = "h=" + std::to_string(h) + " k=" + std::to_string(k) +
                                              " j=" + std::to_string(j);
                                          return false;
                                      }
                                  }
                              }
                      return true;
                  }});
    cs.push_back({"recursion-complex",
                  "rescaled fiber recursion 2(l+1) dz P_{l+1} = dzbar P_{l-1} for the complex family",
                  [hmax, kmax](std::string& d) {
                      for (int h = 0; h <= std::min(hmax, 4); ++h)
                          for (int k = 0; k <= std::min(kmax, 4); ++k)
                              for (Parity par : {Parity::Odd, Parity::Even}) {
                                  Spinor b = basis_complex_rescaled(par, h, k);
                                  // expand in the unnormalized Hermite fiber basis
                                  std::map<int, Spinor> P;
                                  Spinor rest = b;
                                  while (!rest.is_zero()) {
                                      int top = 0;
                                      for (const auto& [m, c] : rest.terms)
                                          top = std::max(top, static_cast<int>(m[2]));
                                      Spinor hl = hermite_unnorm(top);
                                      // leading coefficient of h_top is 2^top
                                      Scalar lead = Scalar::of_rat([&] {
                                          Rat r(1, mpz_class(1) << top);
                                          r.canonicalize();
                                          return r;
                                      }());
                                      Spinor coeff(1);
                                      for (const auto& [m, c] : rest.terms)
                                          if (static_cast<int>(m[2]) == top) {
                                              SMono mm = m;
                                              mm[2] = 0;
                                              coeff.add_term(mm, c * lead);
                                          }
                                      P[top] = P.count(top) ? P[top] + coeff : coeff;
                                      rest = rest - poly_mul(coeff, hl);
                                  }
                                  int lmax = P.empty() ? 0 : P.rbegin()->first;
                                  auto dz = [&](const Spinor& s) {
                                      return (poly_derivative(s, Gen::X, 1) -
                                              poly_derivative(s, Gen::Y, 1) * Scalar::i()) *
                                             Scalar::of(1, 2);
                                  };
                                  auto dzb = [&](const Spinor& s) {
                                      return (poly_derivative(s, Gen::X, 1) +
                                              poly_derivative(s, Gen::Y, 1) * Scalar::i()) *
                                             Scalar::of(1, 2);
                                  };
                                  for (int l = 0; l <= lmax + 1; ++l) {
                                      Spinor Pp = P.count(l + 1) ? P[l + 1] : Spinor(1);
                                      Spinor Pm = P.count(l - 1) ? P[l - 1] : Spinor(1);
                                      Spinor lhs = dz(Pp) * Scalar::of(2 * (l + 1));
                                      Spinor rhs = dzb(Pm);
                                      if (!(lhs == rhs)) {
                                          d = "h=" + std::to_string(h) + " k=" + std::to_string(k) +
                                              " l=" + std::to_string(l);
                                          return false;
                                      }
                                  }
                              }
                      return true;
                  }});
    cs.push_back({"nullspace-span",
                  "nullspace kernel at (h<=3, Q=9) equals the span of the closed forms in the window",
                  [](std::string& d) {
                      const int Q = 9;
                      for (int h = 0; h <= 3; ++h) {
                          std::vector<Spinor> ns = monogenics_by_nullspace(h, Q, 1);
                          std::vector<Spinor> closed;
                          for (int k = h; 2 * k + 1 <= Q; ++k) closed.push_back(basis_real(Parity::Odd, h, k));
                          for (int k = 0; 2 * k <= Q; ++k) closed.push_back(basis_real(Parity::Even, h, k));
                          std::map<SMono, int> col;
                          for (const auto& s : ns)
                              for (const auto& [m, c] : s.terms) col.emplace(m, 0);
                          for (const auto& s : closed)
                              for (const auto& [m, c] : s.terms) col.emplace(m, 0);
                          int idx = 0;
                          for (auto& [m, c] : col) c = idx++;
                          auto rows = [&](const std::vector<Spinor>& v) {
                              std::vector<std::vector<GaussRat>> out;
                              for (const auto& s : v) {
                                  std::vector<GaussRat> row(idx);
                                  for (const auto& [m, c] : s.terms) row[col[m]] = c.constant();
                                  out.push_back(std::move(row));
                              }
                              return out;
                          };
                          if (!same_span(rows(ns), rows(closed))) {
                              d = "span mismatch at h=" + std::to_string(h);
                              return false;
                          }
                      }
                      return true;
                  }});
    cs.push_back({"nullspace-n2", "nullspace kernel nonempty and certified at n=2, h=1, Q=4",
                  [](std::string& d) {
                      std::vector<Spinor> ns = monogenics_by_nullspace(1, 4, 2);
                      if (ns.empty()) {
                          d = "empty";
                          return false;
                      }
                      WeylElement D = build(OpKind::Ds, 2);
                      for (const auto& s : ns)
                          if (!apply(D, s).is_zero()) {
                              d = "member fails kernel";
                              return false;
                          }
                      return true;
                  }});
    cs.push_back({"projector", "P_{h+1} fixes m_{h+1} and kills Xs m_h, Xs^2 m_{h-1} (n=1,2)",
                  [](std::string& d) {
                      for (int n : {1, 2}) {
                          WeylElement X = build(OpKind::Xs, n);
                          for (int h = 0; h <= 3; ++h) {
                              WeylElement P = projector_P(h, n);
                              for (const auto& m : monogenic_corpus(n, h + 1))
                                  if (apply(P, m) != m) {
                                      d = "fix fails n=" + std::to_string(n) + " h=" + std::to_string(h);
                                      return false;
                                  }
                              for (const auto& m : monogenic_corpus(n, h))
                                  if (!apply(P, apply(X, m)).is_zero()) {
                                      d = "kill-1 fails n=" + std::to_string(n) + " h=" + std::to_string(h);
                                      return false;
                                  }
                              if (h >= 1)
                                  for (const auto& m : monogenic_corpus(n, h - 1))
                                      if (!apply(P, apply(X, apply(X, m))).is_zero()) {
                                          d = "kill-2 fails n=" + std::to_string(n) +
                                              " h=" + std::to_string(h);
                                          return false;
                                      }
                          }
                      }
                      return true;
                  }});
    cs.push_back({"ds3-trivial", "Ds^2(x_j m) = i dy_j m and Ds^2(y_j m) = -i dx_j m on monogenics",
                  [](std::string& d) {
                      for (int n : {1, 2}) {
                          WeylElement D = build(OpKind::Ds, n);
                          for (int h = 0; h <= 4; ++h)
                              for (const auto& m : monogenic_corpus(n, h))
                                  for (int j = 1; j <= n; ++j) {
                                      Spinor xm = apply(WeylElement::generator(Gen::X, j, n), m);
                                      Spinor ym = apply(WeylElement::generator(Gen::Y, j, n), m);
                                      Spinor l1 = apply(D, apply(D, xm));
                                      Spinor r1 = apply(WeylElement::generator(Gen::Dy, j, n), m) * Scalar::i();
                                      Spinor l2 = apply(D, apply(D, ym));
                                      Spinor r2 = apply(WeylElement::generator(Gen::Dx, j, n), m) * (-Scalar::i());
                                      if (!(l1 == r1) || !(l2 == r2)) {
                                          d = "n=" + std::to_string(n) + " h=" + std::to_string(h) +
                                              " j=" + std::to_string(j);
                                          return false;
                                      }
                                  }
                      }
                      return true;
                  }});
    cs.push_back({"z-kernel-preservation", "Ds (Z_l m) = 0 for corpus monogenics, l <= 2n, n=1,2",
                  [](std::string& d) {
                      for (int n : {1, 2}) {
                          WeylElement D = build(OpKind::Ds, n);
                          for (int h = 0; h <= 4; ++h)
                              for (const auto& m : monogenic_corpus(n, h))
                                  for (int l = 1; l <= 2 * n; ++l) {
                                      Spinor zm = apply(build(OpName(OpKind::Zreal, l), n), m);
                                      if (!apply(D, zm).is_zero()) {
                                          d = "n=" + std::to_string(n) + " h=" + std::to_string(h) +
                                              " l=" + std::to_string(l);
                                          return false;
                                      }
                                  }
                      }
                      return true;
                  }});
    // the twelve displayed symmetry actions on the complex basis, exact on the
    // rescaled representatives (A shat_k = coeff 2^(k-k') shat_k') and in
    // floating point on the normalized elements
    cs.push_back({"actions-61", "twelve symmetry-operator actions on the complex basis",
                  [](std::string& d) {
                      WeylElement dzO = build(OpKind::Dz, 1), dzbO = build(OpKind::Dzbar, 1);
                      WeylElement HtO = build(OpKind::Ht, 1), XtO = build(OpKind::Xt, 1),
                                  YtO = build(OpKind::Yt, 1);
                      WeylElement Z1O = build(OpKind::Z1, 1), Z2O = build(OpKind::Z2, 1);
                      auto sc = [](long num, long den = 1) { return Scalar::of(num, den); };
                      auto isc = [](long num, long den = 1) {
                          return Scalar::of_gauss(GaussRat::i_times(num, den));
                      };
                      double worst = 0.0;
                      auto check_action = [&](const WeylElement& op, Parity par, int h, int k,
                                              const Scalar& coeff, int h2, int k2,
                                              const std::string& tag) -> bool {
                          Spinor lhs = apply(op, basis_complex_rescaled(par, h, k));
                          bool in_range = (par == Parity::Odd && k2 >= 0) ||
                                          (par == Parity::Even && k2 >= -h2);
                          Spinor rhs(1);
                          if (!coeff.is_zero() && h2 >= 0 && in_range) {
                              // exact scale bookkeeping: factor 2^(k - k')
                              Scalar scale = Scalar::of_rat([&] {
                                  Rat r = k >= k2 ? Rat(mpz_class(1) << (k - k2))
                                                  : Rat(1, mpz_class(1) << (k2 - k));
                                  r.canonicalize();
                                  return r;
                              }());
                              rhs = basis_complex_rescaled(par, h2, k2) * (coeff * scale);
                          }
                          if (!(lhs == rhs)) {
                              d = tag + " exact h=" + std::to_string(h) + " k=" + std::to_string(k);
                              return false;
                          }
                          // floating check on normalized elements: the operator applied to
                          // shat_k / rescale(k) must equal coeff times shat_{k'} / rescale(k')
                          double fl = rescale_complex(par, k).value();
                          double fr = (!coeff.is_zero() && h2 >= 0 && in_range)
                                          ? rescale_complex(par, k2).value()
                                          : 1.0;
                          Spinor rhs_unscaled(1);
                          if (!coeff.is_zero() && h2 >= 0 && in_range)
                              rhs_unscaled = basis_complex_rescaled(par, h2, k2) * coeff;
                          double err = float_distance(lhs, rhs_unscaled, fl, fr);
                          worst = std::max(worst, err);
                          if (err > 1e-9) {
                              d = tag + " float h=" + std::to_string(h) + " k=" + std::to_string(k);
                              return false;
                          }
                          return true;
                      };
                      for (int h = 0; h <= 4; ++h) {
                          for (int k = 0; k <= 5; ++k) {
                              // odd family
                              if (!check_action(dzO, Parity::Odd, h, k, h > 0 ? sc(h) : Scalar::zero(),
                                                h - 1, k + 1, "dz odd"))
                                  return false;
                              if (!check_action(dzbO, Parity::Odd, h, k, h > 0 ? sc(h) : Scalar::zero(),
                                                h - 1, k, "dzbar odd"))
                                  return false;
                              if (!check_action(HtO, Parity::Odd, h, k, sc(2 * h + 4 * k + 3, 2), h, k,
                                                "Ht odd"))
                                  return false;
                              if (!check_action(XtO, Parity::Odd, h, k, isc(2 * h + 2 * k + 3, 2), h,
                                                k + 1, "Xt odd"))
                                  return false;
                              if (!check_action(YtO, Parity::Odd, h, k, k > 0 ? isc(k) : Scalar::zero(),
                                                h, k - 1, "Yt odd"))
                                  return false;
                              if (!check_action(Z1O, Parity::Odd, h, k, sc((1 + h) * (2 * h + 2 * k + 3)),
                                                h + 1, k, "Z1 odd"))
                                  return false;
                              if (!check_action(Z2O, Parity::Odd, h, k,
                                                k > 0 ? sc(2 * (h + 1) * k) : Scalar::zero(), h + 1,
                                                k - 1, "Z2 odd"))
                                  return false;
                          }
                          for (int k = -h; k <= 5; ++k) {
                              // even family
                              if (!check_action(dzO, Parity::Even, h, k, h > 0 ? sc(h) : Scalar::zero(),
                                                h - 1, k + 1, "dz even"))
                                  return false;
                              if (!check_action(dzbO, Parity::Even, h, k,
                                                (h > 0 && k != -h) ? sc(h) : Scalar::zero(), h - 1, k,
                                                "dzbar even"))
                                  return false;
                              if (!check_action(HtO, Parity::Even, h, k, sc(2 * h + 4 * k + 1, 2), h, k,
                                                "Ht even"))
                                  return false;
                              if (!check_action(XtO, Parity::Even, h, k, isc(h + k + 1), h, k + 1,
                                                "Xt even"))
                                  return false;
                              if (!check_action(YtO, Parity::Even, h, k,
                                                k != -h ? isc(2 * k - 1, 2) : Scalar::zero(), h, k - 1,
                                                "Yt even"))
                                  return false;
                              if (!check_action(Z1O, Parity::Even, h, k, sc(2 * (h + 1) * (h + k + 1)),
                                                h + 1, k, "Z1 even"))
                                  return false;
                              if (!check_action(Z2O, Parity::Even, h, k, sc((h + 1) * (2 * k - 1)),
                                                h + 1, k - 1, "Z2 even"))
                                  return false;
                          }
                      }
                      std::ostringstream os;
                      os << "max float error " << worst;
                      d = os.str();
                      return true;
                  }});
    cs.push_back({"grading", "graded components are E-eigenvectors with integer eigenvalue",
                  [](std::string& d) {
                      auto rng = seeded(0x9e3779b9);
                      WeylElement E = build(OpKind::E, 1);
                      for (int trial = 0; trial < 20; ++trial) {
                          Spinor s = random_spinor(rng, 1, 4, 4);
                          Spinor sum(1);
                          for (const auto& [h, comp] : grade(s)) {
                              if (apply(E, comp) != comp * Scalar::of(h)) {
                                  d = "eigenvalue fails";
                                  return false;
                              }
                              sum = sum + comp;
                          }
                          if (!(sum == s)) {
                              d = "components do not sum";
                              return false;
                          }
                      }
                      return true;
                  }});
    return cs;
}

// ------------------------- pairing suite -------------------------

double simpson_moment(int power) {
    // adaptive-step Simpson for integral of q^power e^{-q^2} over [-L, L]
    const double L = 12.0;
    const int steps = 48000;  // even
    auto f = [&](double q) { return std::pow(q, power) * std::exp(-q * q); };
    double h = 2 * L / steps;
    double acc = f(-L) + f(L);
    for (int i = 1; i < steps; ++i) acc += f(-L + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

std::vector<Check> pairing_checks(const SuiteParams& p) {
    std::vector<Check> cs;
    cs.push_back({"moment-oracle",
                  "integral q^{2t} e^{-q^2} = tau (2t-1)!!/2^t against numerical quadrature, t <= 8",
                  [](std::string& d) {
                      for (int t = 0; t <= 8; ++t) {
                          double impl = gaussian_moment(t).to_float().real();
                          double quad = simpson_moment(2 * t);
                          if (std::abs(impl - quad) > 1e-10 * std::max(1.0, std::abs(quad))) {
                              d = "t=" + std::to_string(t);
                              return false;
                          }
                      }
                      return true;
                  }});
    cs.push_back({"moment-discrepancy",
                  "the printed moment tau(2t+1)/2^t disagrees with quadrature for every t >= 1 "
                  "(documented discrepancy; the double-factorial value is implemented)",
                  [](std::string& d) {
                      for (int t = 1; t <= 8; ++t) {
                          double printed = gaussian_moment_as_printed(t).to_float().real();
                          double quad = simpson_moment(2 * t);
                          if (std::abs(printed - quad) <= 1e-6 * std::abs(quad)) {
                              d = "printed formula unexpectedly correct at t=" + std::to_string(t);
                              return false;
                          }
                      }
                      d = "printed formula flagged; double-factorial moments verified";
                      return true;
                  }});
    cs.push_back({"base-values", "<x^2,y^2> = 2 and <xy,xy> = -1 in the base pairing",
                  [](std::string& d) {
                      Spinor x = Spinor::variable(Gen::X, 1, 1), y = Spinor::variable(Gen::Y, 1, 1);
                      Scalar two_tau = Scalar::of(2) * Scalar::tau();
                      Scalar minus_tau = Scalar::of(-1) * Scalar::tau();
                      bool ok = fischer(poly_pow(x, 2), poly_pow(y, 2)).value == two_tau &&
                                fischer(poly_mul(x, y), poly_mul(x, y)).value == minus_tau;
                      if (!ok) d = "base values differ";
                      return ok;
                  }});
    cs.push_back({"adjoint-table", "six generator adjoints, Ds/Xs adjointness, mp2 skew-adjointness",
                  [](std::string& d) {
                      AdjointReport rep = adjoint_table_check();
                      for (const auto& e : rep.entries)
                          if (!e.pass) {
                              d = "fails: " + e.relation;
                              return false;
                          }
                      d = std::to_string(rep.entries.size()) + " relations verified";
                      return true;
                  }});
    cs.push_back({"fischer-orthogonality",
                  "<Xs^j m_k, Xs^l m_h> = 0 unless j = l and k = h, corpus h <= 3",
                  [](std::string& d) {
                      WeylElement X = build(OpKind::Xs, 1);
                      for (int k = 0; k <= 3; ++k)
                          for (int h = 0; h <= 3; ++h)
                              for (int j = 0; j <= 2; ++j)
                                  for (int l = 0; l <= 2; ++l) {
                                      if (j == l && k == h) continue;
                                      Spinor a = basis_real(Parity::Even, k, 1);
                                      Spinor b = basis_real(Parity::Even, h, 2);
                                      for (int t = 0; t < j; ++t) a = apply(X, a);
                                      for (int t = 0; t < l; ++t) b = apply(X, b);
                                      if (!fischer(a, b).is_zero()) {
                                          d = "j=" + std::to_string(j) + " l=" + std::to_string(l) +
                                              " k=" + std::to_string(k) + " h=" + std::to_string(h);
                                          return false;
                                      }
                                  }
                      return true;
                  }});
    cs.push_back({"homogeneity2-rederived",
                  "homogeneity-2 real-family pairings equal -3(2K-3)!!/2^(K-2) tau (odd) and "
                  "-3(2K-5)!!/2^(K-3) tau (even), K = k+l; re-derived (the printed table lacks "
                  "the double factorials)",
                  [](std::string& d) {
                      for (int k = 2; k <= 5; ++k)
                          for (int l = 2; l <= 5; ++l) {
                              int K = k + l;
                              Rat odd_c(-3 * double_factorial(2 * K - 3), mpz_class(1) << (K - 2));
                              odd_c.canonicalize();
                              Rat even_c(-3 * double_factorial(2 * K - 5), mpz_class(1) << (K - 3));
                              even_c.canonicalize();
                              Scalar odd_want = Scalar::of_rat(odd_c) * Scalar::tau();
                              Scalar even_want = Scalar::of_rat(even_c) * Scalar::tau();
                              if (fischer(basis_real(Parity::Odd, 2, k), basis_real(Parity::Odd, 2, l)).value !=
                                  odd_want) {
                                  d = "odd k=" + std::to_string(k) + " l=" + std::to_string(l);
                                  return false;
                              }
                              if (fischer(basis_real(Parity::Even, 2, k), basis_real(Parity::Even, 2, l)).value !=
                                  even_want) {
                                  d = "even k=" + std::to_string(k) + " l=" + std::to_string(l);
                                  return false;
                              }
                              if (!fischer(basis_real(Parity::Odd, 2, k), basis_real(Parity::Even, 2, l)).is_zero()) {
                                  d = "mixed parity nonzero";
                                  return false;
                              }
                          }
                      d = "table re-derived with double-factorial moments";
                      return true;
                  }});
    cs.push_back({"fischer1-monomial", "<z^r zbar^s, z^t zbar^u>_1 base part = r!s!/(r+s)! delta delta",
                  [](std::string& d) {
                      // realized through fischer1 on elements with fiber parts chosen so the
                      // fiber integral is 1/sqrt(2)-free: use h_1 = 2q on the left, 1 on right:
                      // integral (dq 2q e) e = 2 tau - 2 tau/2 = tau
                      Spinor x = Spinor::variable(Gen::X, 1, 1), y = Spinor::variable(Gen::Y, 1, 1);
                      Spinor z = x + y * Scalar::i(), zb = x - y * Scalar::i();
                      Spinor h1 = hermite_unnorm(1);
                      for (int r = 0; r <= 2; ++r)
                          for (int s = 0; r + s <= 3; ++s)
                              for (int t2 = 0; t2 <= 2; ++t2)
                                  for (int u = 0; t2 + u <= 3; ++u) {
                                      Spinor a = poly_mul(poly_mul(poly_pow(z, r), poly_pow(zb, s)), h1);
                                      Spinor b = poly_mul(poly_pow(z, t2), poly_pow(zb, u));
                                      PairingValue v = fischer1(a, b);
                                      Scalar want = Scalar::zero();
                                      if (r == t2 && s == u) {
                                          mpz_class rf, sf, hf;
                                          mpz_fac_ui(rf.get_mpz_t(), r);
                                          mpz_fac_ui(sf.get_mpz_t(), s);
                                          mpz_fac_ui(hf.get_mpz_t(), r + s);
                                          Rat c(rf * sf, hf);
                                          c.canonicalize();
                                          want = Scalar::of_rat(c) * Scalar::tau();
                                      }
                                      if (v.value != want || !v.sqrt2) {
                                          d = "r=" + std::to_string(r) + " s=" + std::to_string(s);
                                          return false;
                                      }
                                  }
                      return true;
                  }});
    cs.push_back({"isotropy-exact",
                  "<o_k, E_l>_1 = 2^k sqrt2 tau delta_{k,l} on rescaled representatives; "
                  "<o,o>_1 = <E,E>_1 = 0; swapped sign on exchange",
                  [](std::string& d) {
                      for (int h = 0; h <= 4; ++h)
                          for (int k = 0; k <= 4; ++k)
                              for (int l = 0; l <= 4; ++l) {
                                  Spinor ok_ = basis_complex_rescaled(Parity::Odd, h, k);
                                  Spinor El = basis_sE(h, l);
                                  Scalar want = Scalar::zero();
                                  if (k == l)
                                      want = Scalar::of_rat(Rat(mpz_class(1) << k)) * Scalar::tau();
                                  PairingValue v = fischer1(ok_, El);
                                  if (v.value != want) {
                                      d = "oE h=" + std::to_string(h) + " k=" + std::to_string(k) +
                                          " l=" + std::to_string(l);
                                      return false;
                                  }
                                  PairingValue w = fischer1(El, ok_);
                                  if (w.value != -want) {
                                      d = "Eo swap h=" + std::to_string(h);
                                      return false;
                                  }
                                  if (!fischer1(ok_, basis_complex_rescaled(Parity::Odd, h, l)).is_zero()) {
                                      d = "oo nonzero";
                                      return false;
                                  }
                                  if (!fischer1(basis_sE(h, k), El).is_zero()) {
                                      d = "EE nonzero";
                                      return false;
                                  }
                              }
                      return true;
                  }});
    cs.push_back({"isotropy-float",
                  "<s_o,k, s_E,l>_1 = delta_{k,l} on normalized elements to 1e-9 (h <= 4, k,l <= 6)",
                  [](std::string& d) {
                      double worst = 0.0;
                      for (int h = 0; h <= 4; ++h)
                          for (int k = 0; k <= 6; ++k)
                              for (int l = 0; l <= 6; ++l) {
                                  Spinor ok_ = basis_complex_rescaled(Parity::Odd, h, k);
                                  Spinor El = basis_sE(h, l);
                                  double fk = rescale_complex(Parity::Odd, k).value();
                                  double fE = rescale_sE().value();
                                  std::complex<double> v = fischer1(ok_, El).to_float() / (fk * fE);
                                  double want = k == l ? 1.0 : 0.0;
                                  worst = std::max(worst, std::abs(v - std::complex<double>(want, 0)));
                              }
                      std::ostringstream os;
                      os << "max error " << worst;
                      d = os.str();
                      return worst <= 1e-9;
                  }});
    cs.push_back({"isotropy-negative-k",
                  "<e_l, e_k>_1 = <o_j, e_k>_1 = <E_j, e_k>_1 = 0 for -h <= k < 0",
                  [](std::string& d) {
                      for (int h = 1; h <= 4; ++h)
                          for (int k = -h; k < 0; ++k) {
                              Spinor ek = basis_complex_rescaled(Parity::Even, h, k);
                              for (int l = -h; l <= 3; ++l)
                                  if (!fischer1(basis_complex_rescaled(Parity::Even, h, l), ek).is_zero()) {
                                      d = "ee h=" + std::to_string(h);
                                      return false;
                                  }
                              for (int j = 0; j <= 3; ++j) {
                                  if (!fischer1(basis_complex_rescaled(Parity::Odd, h, j), ek).is_zero()) {
                                      d = "oe h=" + std::to_string(h);
                                      return false;
                                  }
                                  if (!fischer1(basis_sE(h, j), ek).is_zero()) {
                                      d = "Ee h=" + std::to_string(h);
                                      return false;
                                  }
                              }
                          }
                      return true;
                  }});
    cs.push_back({"fischer1-homogeneity", "<,>_1 vanishes between different base homogeneities",
                  [](std::string& d) {
                      for (int h = 0; h <= 3; ++h)
                          for (int h2 = 0; h2 <= 3; ++h2) {
                              if (h == h2) continue;
                              if (!fischer1(basis_complex_rescaled(Parity::Odd, h, 1),
                                            basis_complex_rescaled(Parity::Odd, h2, 1))
                                       .is_zero()) {
                                  d = "h=" + std::to_string(h) + " h'=" + std::to_string(h2);
                                  return false;
                              }
                          }
                      return true;
                  }});
    cs.push_back({"example-h2",
                  "homogeneity-2 odd pairings: diagonal 16(2k+2)!!/(2k+3)!!, off-diagonal at "
                  "|k-l| = 2 equals -8(2max)!!/(2max+1)!!, zero otherwise (bilinear form)",
                  [](std::string& d) {
                      double worst = 0.0;
                      for (int k = 1; k <= 6; ++k)
                          for (int l = 1; l <= 6; ++l) {
                              Spinor a = basis_complex_rescaled(Parity::Odd, 2, k);
                              Spinor b = basis_complex_rescaled(Parity::Odd, 2, l);
                              double fk = rescale_complex(Parity::Odd, k).value();
                              double fl = rescale_complex(Parity::Odd, l).value();
                              std::complex<double> v = fischer_bilinear(a, b).to_float() / (fk * fl);
                              double want = 0.0;
                              auto dfr = [](long m) {
                                  return double_factorial(m).get_d() / double_factorial(m + 1).get_d();
                              };
                              if (k == l) want = 16.0 * dfr(2 * k + 2);
                              if (l == k - 2) want = -8.0 * dfr(2 * k);
                              if (l == k + 2) want = -8.0 * dfr(2 * k + 4);
                              worst = std::max(worst, std::abs(v - std::complex<double>(want, 0)));
                          }
                      std::ostringstream os;
                      os << "max error " << worst;
                      d = os.str();
                      return worst <= 1e-9;
                  }});
    cs.push_back({"example-h3",
                  "homogeneity-3 odd pairings: zero diagonal, nonzero only at |k-l| in {1,3}; "
                  "the |k-l|=3 entries match the printed -48i/(+48i) values, the |k-l|=1 entries "
                  "re-derive to -+144i (2max)!!/(2max+1)!! (printed +-16i lacks the binomial^2)",
                  [](std::string& d) {
                      double worst = 0.0;
                      for (int k = 1; k <= 5; ++k)
                          for (int l = 1; l <= 5; ++l) {
                              Spinor a = basis_complex_rescaled(Parity::Odd, 3, k);
                              Spinor b = basis_complex_rescaled(Parity::Odd, 3, l);
                              double fk = rescale_complex(Parity::Odd, k).value();
                              double fl = rescale_complex(Parity::Odd, l).value();
                              std::complex<double> v = fischer_bilinear(a, b).to_float() / (fk * fl);
                              auto dfr = [](long m) {
                                  return double_factorial(m).get_d() / double_factorial(m + 1).get_d();
                              };
                              std::complex<double> want{0, 0};
                              if (l == k - 3) want = {0, -48.0 * dfr(2 * k)};
                              if (l == k - 1) want = {0, 144.0 * dfr(2 * k + 2)};
                              if (l == k + 1) want = {0, -144.0 * dfr(2 * k + 4)};
                              if (l == k + 3) want = {0, 48.0 * dfr(2 * k + 6)};
                              worst = std::max(worst, std::abs(v - want));
                          }
                      std::ostringstream os;
                      os << "max error " << worst << "; middle coefficients re-derived";
                      d = os.str();
                      return worst <= 1e-9;
                  }});
    cs.push_back({"kernel-K", "K_k reproduces degree-k base polynomials, k <= 3", [](std::string& d) {
                      auto rng = seeded(0xabcdef);
                      for (int k = 0; k <= 3; ++k) {
                          TwoPointKernel K = kernel_K(k);
                          for (int trial = 0; trial < 6; ++trial) {
                              // random base polynomial of degree exactly k
                              Spinor psp(1);
                              std::uniform_int_distribution<int> dsplit(0, k);
                              std::uniform_int_distribution<int> dcoef(-4, 4);
                              for (int t = 0; t < 3; ++t) {
                                  int a = dsplit(rng);
                                  SMono m{Exp(a), Exp(k - a), 0};
                                  psp.add_term(m, Scalar::of(dcoef(rng)));
                              }
                              Spinor got = kernel_pair(K, psp);
                              if (!(got == psp)) {
                                  d = "k=" + std::to_string(k);
                                  return false;
                              }
                          }
                      }
                      return true;
                  }});
    cs.push_back({"kernel-Z",
                  "Z_k reproduces monogenics and annihilates Xs^j m_{k-j}, k <= 3", [](std::string& d) {
                      WeylElement X = build(OpKind::Xs, 1);
                      for (int k = 0; k <= 3; ++k) {
                          TwoPointKernel Z = kernel_Z(k);
                          for (const auto& m : monogenic_corpus(1, k)) {
                              if (!(kernel_pair(Z, m) == m)) {
                                  d = "reproduce k=" + std::to_string(k);
                                  return false;
                              }
                          }
                          for (int j = 1; j <= k; ++j) {
                              for (const auto& m : monogenic_corpus(1, k - j)) {
                                  Spinor raised = m;
                                  for (int t = 0; t < j; ++t) raised = apply(X, raised);
                                  if (!kernel_pair(Z, raised).is_zero()) {
                                      d = "annihilate k=" + std::to_string(k) + " j=" + std::to_string(j);
                                      return false;
                                  }
                              }
                          }
                      }
                      return true;
                  }});
    (void)p;
    return cs;
}

// ------------------------- spectral suite -------------------------

std::vector<Check> spectral_checks(const SuiteParams& p) {
    std::vector<Check> cs;
    cs.push_back({"beta-recursion",
                  "alpha (j-l) beta_l = (l+1)/2 (2k+2n+l) beta_{l+1} for the Laguerre coefficients",
                  [](std::string& d) {
                      for (int n : {1, 2})
                          for (int j = 0; j <= 4; ++j)
                              for (int k = 0; k <= 3; ++k) {
                                  LaguerreOpPoly g = laguerre_coeffs(j, k, n);
                                  for (int l = 0; l < j; ++l) {
                                      Scalar lhs = Scalar::alpha() * Scalar::of(j - l) * g.beta[l];
                                      Scalar rhs = Scalar::of(l + 1, 2) * Scalar::of(2 * k + 2 * n + l) *
                                                   g.beta[l + 1];
                                      if (lhs != rhs) {
                                          d = "j=" + std::to_string(j) + " k=" + std::to_string(k) +
                                              " n=" + std::to_string(n);
                                          return false;
                                      }
                                  }
                              }
                      return true;
                  }});
    for (int n = 1; n <= 2; ++n) {
        int maxj = p.max_j, maxk = p.max_k;
        cs.push_back({"eigen-n" + std::to_string(n),
                      "Ds(g m) - i alpha (E+n) g m = -i alpha (n+j+k) g m exactly in alpha (n=" +
                          std::to_string(n) + ")",
                      [n, maxj, maxk](std::string& d) {
                          for (int k = 0; k <= maxk; ++k) {
                              auto corpus = monogenic_corpus(n, k);
                              for (int j = 0; j <= maxj; ++j)
                                  for (const auto& m : corpus)
                                      if (!verify_conjugated_eigen(j, k, n, m)) {
                                          d = "j=" + std::to_string(j) + " k=" + std::to_string(k);
                                          return false;
                                      }
                          }
                          return true;
                      }});
    }
    cs.push_back({"eigenvalue-values", "lambda = -i alpha (n+j+k) instances", [](std::string& d) {
                      bool ok = eigenvalue(0, 0, 1) == Scalar::alpha_pow(1, GaussRat::i_times(-1)) &&
                                eigenvalue(2, 1, 1) == Scalar::alpha_pow(1, GaussRat::i_times(-4)) &&
                                eigenvalue(0, 0, 3) == Scalar::alpha_pow(1, GaussRat::i_times(-3));
                      if (!ok) d = "unexpected eigenvalue";
                      return ok;
                  }});
    cs.push_back({"xs-power-closed", "Xs^k on the vacuum matches the closed-form sum, k <= 12",
                  [](std::string& d) {
                      for (int k = 0; k <= 12; ++k) {
                          try {
                              xs_power_gaussian(k);
                          } catch (const std::exception& e) {
                              d = "k=" + std::to_string(k) + ": " + e.what();
                              return false;
                          }
                      }
                      return true;
                  }});
    cs.push_back({"exp-identity", "e^{alpha Xs} vacuum identity to alpha-order 8", [](std::string& d) {
                      if (!exp_identity_truncated(8)) {
                          d = "coefficient mismatch";
                          return false;
                      }
                      return true;
                  }});
    cs.push_back({"dxnak", "[E+n,Xs^k] = k Xs^k and [Ds,Xs^k] = -ik(k-1)/2 Xs^{k-1} - ik Xs^{k-1}(E+n)",
                  [](std::string& d) {
                      for (int n : {1, 2}) {
                          WeylElement X = build(OpKind::Xs, n), D = build(OpKind::Ds, n);
                          WeylElement En = euler_shifted(n);
                          for (int k = 1; k <= 10; ++k) {
                              if (n == 2 && k > 6) continue;  // size guard, n=1 covers the range
                              WeylElement xk = weyl_pow(X, k);
                              if (commutator(En, xk) != xk * Scalar::of(k)) {
                                  d = "euler bracket k=" + std::to_string(k);
                                  return false;
                              }
                              WeylElement want =
                                  weyl_pow(X, k - 1) *
                                      Scalar::of_gauss(GaussRat::i_times(-static_cast<long>(k) * (k - 1), 2)) +
                                  weyl_pow(X, k - 1) * En * Scalar::of_gauss(GaussRat::i_times(-k));
                              if (commutator(D, xk) != want) {
                                  d = "dirac bracket k=" + std::to_string(k) + " n=" + std::to_string(n);
                                  return false;
                              }
                          }
                      }
                      return true;
                  }});
    cs.push_back({"exp-commutator",
                  "sum_k alpha^k/k! [Ds,Xs^k] = -i alpha e^{alpha Xs}(E+n) - i alpha^2/2 Xs e^{alpha Xs}, "
                  "truncated to alpha-order 6",
                  [](std::string& d) {
                      const int N = 6;
                      const int n = 1;
                      WeylElement X = build(OpKind::Xs, n), D = build(OpKind::Ds, n);
                      WeylElement En = euler_shifted(n);
                      auto exp_trunc = [&](int order) {
                          WeylElement acc = WeylElement::zero(n);
                          mpz_class kfac = 1;
                          for (int k = 0; k <= order; ++k) {
                              if (k > 0) kfac *= k;
                              Rat c(1, kfac);
                              c.canonicalize();
                              acc += weyl_pow(X, k) * Scalar::alpha_pow(k, GaussRat{c, Rat(0)});
                          }
                          return acc;
                      };
                      WeylElement lhs = WeylElement::zero(n);
                      mpz_class kfac = 1;
                      for (int k = 0; k <= N; ++k) {
                          if (k > 0) kfac *= k;
                          Rat c(1, kfac);
                          c.canonicalize();
                          lhs += commutator(D, weyl_pow(X, k)) * Scalar::alpha_pow(k, GaussRat{c, Rat(0)});
                      }
                      WeylElement rhs = exp_trunc(N - 1) * En * Scalar::alpha_pow(1, GaussRat::i_times(-1)) +
                                        X * exp_trunc(N - 2) * Scalar::alpha_pow(2, GaussRat::i_times(-1, 2));
                      auto truncate = [&](const WeylElement& w) {
                          WeylElement r(n);
                          for (const auto& [m, c] : w.terms) r.add_term(m, c.truncated_alpha(N));
                          return r;
                      };
                      return weyl_equal_detail(truncate(lhs), truncate(rhs), d);
                  }});
    cs.push_back({"q-growth", "deg_q(Xs^k q^j vacuum) = k + j for k <= 10, j <= 5", [](std::string& d) {
                      WeylElement X = build(OpKind::Xs, 1);
                      for (int j = 0; j <= 5; ++j) {
                          Spinor s = Spinor::monomial(1, SMono{0, 0, Exp(j)});
                          for (int k = 0; k <= 10; ++k) {
                              int top = 0;
                              for (const auto& [m, c] : s.terms) top = std::max(top, static_cast<int>(m[2]));
                              if (top != k + j) {
                                  d = "k=" + std::to_string(k) + " j=" + std::to_string(j);
                                  return false;
                              }
                              s = apply(X, s);
                          }
                      }
                      return true;
                  }});
    return cs;
}

// ------------------------- symmetry suite -------------------------

std::vector<Check> symmetry_checks(const SuiteParams& p) {
    std::vector<Check> cs;
    cs.push_back({"degree0", "constant-coefficient symmetries are span{dx, dy, Id}", [](std::string& d) {
                      SymmetryBasis basis = solve_symmetries(0);
                      if (basis.ops.size() != 3) {
                          d = "dimension " + std::to_string(basis.ops.size());
                          return false;
                      }
                      std::vector<WeylElement> got;
                      for (const auto& pr : basis.ops) got.push_back(pr.A);
                      std::vector<WeylElement> want = {WeylElement::generator(Gen::Dx, 1, 1),
                                                       WeylElement::generator(Gen::Dy, 1, 1),
                                                       WeylElement::unit(1)};
                      if (!weyl_same_span(got, want)) {
                          d = "span mismatch";
                          return false;
                      }
                      return true;
                  }});
    int deg = std::max(p.degree, 3);
    cs.push_back({"classification",
                  "first-order symmetry space has dimension 7 = span{dx, dy, Htilde, Xtilde, E, "
                  "yHtilde - 2xXtilde + yE + 3y/2, Id}",
                  [deg](std::string& d) {
                      SymmetryBasis basis = solve_symmetries(deg);
                      if (basis.ops.size() != 7) {
                          d = "dimension " + std::to_string(basis.ops.size());
                          return false;
                      }
                      std::vector<WeylElement> got;
                      for (const auto& pr : basis.ops) got.push_back(pr.A);
                      if (!weyl_same_span(got, theorem_symmetry_list())) {
                          d = "span mismatch";
                          return false;
                      }
                      d = "dimension: 7";
                      return true;
                  }});
    cs.push_back({"alpha-membership", "yHtilde - 2xXtilde + yE + 3y/2 solves Ds A = B Ds",
                  [](std::string& d) {
                      SymmetryBasis basis = solve_symmetries(3);
                      std::vector<WeylElement> got;
                      for (const auto& pr : basis.ops) got.push_back(pr.A);
                      if (!weyl_in_span(got, theorem_symmetry_list()[5])) {
                          d = "not in solution span";
                          return false;
                      }
                      return true;
                  }});
    cs.push_back({"certificates", "structural shapes and Ds A = B Ds certificates", [](std::string& d) {
                      StructuralReport rep = structural_constraints_check();
                      for (const auto& e : rep.entries)
                          if (!e.pass) {
                              d = "fails: " + e.what;
                              return false;
                          }
                      d = std::to_string(rep.entries.size()) + " facts verified";
                      return true;
                  }});
    cs.push_back({"stability", "dimension stays 7 at ansatz degrees 4 and 5", [](std::string& d) {
                      SymmetryBasis b3 = solve_symmetries(3);
                      std::vector<WeylElement> s3;
                      for (const auto& pr : b3.ops) s3.push_back(pr.A);
                      for (int dd : {4, 5}) {
                          SymmetryBasis bd = solve_symmetries(dd);
                          if (bd.ops.size() != 7) {
                              d = "dimension " + std::to_string(bd.ops.size()) + " at degree " +
                                  std::to_string(dd);
                              return false;
                          }
                          std::vector<WeylElement> sd;
                          for (const auto& pr : bd.ops) sd.push_back(pr.A);
                          if (!weyl_same_span(s3, sd)) {
                              d = "span drifts at degree " + std::to_string(dd);
                              return false;
                          }
                      }
                      return true;
                  }});
    cs.push_back({"nonclosure",
                  "[[dx,Z_1],[dy,Z_2]] = 4 Htilde (2E+1)^2 and lies outside "
                  "span{Htilde,Xtilde,Ytilde,dx,dy,Z_1,Z_2,E,Id}",
                  [](std::string& d) {
                      WeylElement Z1 = z_corollary(1), Z2 = z_corollary(2);
                      WeylElement dx = WeylElement::generator(Gen::Dx, 1, 1);
                      WeylElement dy = WeylElement::generator(Gen::Dy, 1, 1);
                      WeylElement witness = commutator(commutator(dx, Z1), commutator(dy, Z2));
                      WeylElement twoE = build(OpKind::E, 1) * Scalar::of(2) + WeylElement::unit(1);
                      WeylElement want = build(OpKind::Htilde, 1) * twoE * twoE * Scalar::of(4);
                      if (witness != want) {
                          d = "witness identity fails";
                          return false;
                      }
                      std::vector<WeylElement> span = {build(OpKind::Htilde, 1),
                                                       build(OpKind::Xtilde, 1),
                                                       build(OpKind::Ytilde, 1),
                                                       dx,
                                                       dy,
                                                       Z1,
                                                       Z2,
                                                       build(OpKind::E, 1),
                                                       WeylElement::unit(1)};
                      if (weyl_in_span(span, witness)) {
                          d = "witness unexpectedly inside the span";
                          return false;
                      }
                      return true;
                  }});
    return cs;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& name, const SuiteParams& params) {
    if (name == "commutators") return run_checks(name, commutator_checks(params), params);
    if (name == "bases") return run_checks(name, bases_checks(params), params);
    if (name == "pairing") return run_checks(name, pairing_checks(params), params);
    if (name == "spectral") return run_checks(name, spectral_checks(params), params);
    if (name == "symmetry") return run_checks(name, symmetry_checks(params), params);
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const char* s : {"commutators", "bases", "pairing", "spectral", "symmetry"}) {
            auto part = run_suite(s, params);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

std::string check_to_json_line(const CheckResult& r) {
    nlohmann::json j{{"suite", r.suite},
                     {"check_id", r.check_id},
                     {"anchor", r.anchor},
                     {"status", r.pass ? "pass" : "fail"},
                     {"detail", r.detail}};
    return j.dump();
}

}  // namespace sympclif
