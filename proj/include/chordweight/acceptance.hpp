#pragma once

// The acceptance suite: eight exact checks shared by the test binary and `chordweight verify`.

#include <cstddef>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "curvature.hpp"
#include "diagram_space.hpp"
#include "diagrams.hpp"
#include "lie.hpp"
#include "models.hpp"
#include "oracle.hpp"
#include "tensor.hpp"
#include "yamada.hpp"

namespace chordweight::acceptance {

struct Outcome {
  int id = 0;
  std::string name;
  bool ok = true;
  std::string detail;
};

namespace detail {

// Collects failures; the first few are kept for the report.
class Log {
public:
  void fail(std::string msg) {
    ++failures_;
    if (failures_ <= 3) msgs_ += (msgs_.empty() ? "" : "; ") + msg;
  }
  void expect(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
  void note(std::string s) { notes_ += (notes_.empty() ? "" : ", ") + std::move(s); }
  Outcome finish(int id, std::string name) const {
    Outcome o{id, std::move(name), failures_ == 0, {}};
    o.detail = failures_ == 0 ? notes_ : std::to_string(failures_) + " failure(s): " + msgs_;
    return o;
  }

private:
  std::size_t failures_ = 0;
  std::string msgs_;
  std::string notes_;
};

inline std::vector<ChordDiagram> diagrams_up_to(std::size_t max_n) {
  std::vector<ChordDiagram> out;
  for (std::size_t n = 0; n <= max_n; ++n)
    for (auto& d : enumerate_diagrams(n)) out.push_back(std::move(d));
  return out;
}

inline std::string show(const ChordDiagram& d) { return d.empty() ? std::string("(empty)") : d.code(); }

struct NamedModel {
  std::string name;
  CurvatureModel model;
};

// Constant-curvature models: d in {2,3,4}, g in {I, diag(-1,1,..)}, kappa in {1,-1,2}.
inline std::vector<NamedModel> constant_curvature_family() {
  std::vector<NamedModel> out;
  for (std::size_t d = 2; d <= 4; ++d)
    for (int lorentz = 0; lorentz < 2; ++lorentz)
      for (int kappa : {1, -1, 2}) {
        const Matrix g = lorentz ? models::lorentzian_metric(d) : Matrix::identity(d);
        out.push_back({"d=" + std::to_string(d) + (lorentz ? " g=diag(-1,1..)" : " g=I") + " kappa=" + std::to_string(kappa),
                       constant_curvature(g, kappa)});
      }
  return out;
}

}  // namespace detail

/// yamada(., 3) = w(S^3) = w(so3) on every diagram with at most 4 chords.
inline Outcome three_way_equality() {
  detail::Log log;
  const WeightTensor s3 = to_weight_tensor(models::unit_sphere(3));
  const WeightTensor so3 = weight_tensor_of_rep(builtin_so(3));
  const auto all = detail::diagrams_up_to(4);
  for (const auto& d : all) {
    const Rational y = yamada_weight(d, 3);
    const Rational c = evaluate(s3, d);
    const Rational l = evaluate(so3, d);
    if (y != c || c != l)
      log.fail(detail::show(d) + ": yamada " + to_string(y) + ", sphere " + to_string(c) + ", so3 " + to_string(l));
  }
  const std::tuple<const char*, int> spots[] = {{"AA", 6}, {"ABAB", 6}, {"AABB", 12}};
  for (const auto& [code, value] : spots) {
    const auto d = ChordDiagram::parse(code);
    log.expect(yamada_weight(d) == value && evaluate(s3, d) == value && evaluate(so3, d) == value,
               std::string(code) + " should give " + std::to_string(value));
  }
  log.expect(all.size() == 27, "expected 27 diagrams, got " + std::to_string(all.size()));
  log.note(std::to_string(all.size()) + " diagrams agree; AA=6 ABAB=6 AABB=12");
  return log.finish(1, "three-way weight-system equality (n<=4)");
}

/// Every generated 4T vector with n <= 4 vanishes under six weight tensors.
inline Outcome four_term_soundness() {
  detail::Log log;
  const std::vector<std::pair<std::string, WeightTensor>> tensors{
      {"sl2", weight_tensor_of_rep(builtin_sl2())},
      {"so3", weight_tensor_of_rep(builtin_so(3))},
      {"so4", weight_tensor_of_rep(builtin_so(4))},
      {"S3", to_weight_tensor(models::unit_sphere(3))},
      {"H3", to_weight_tensor(models::hyperbolic(3))},
      {"indefinite", to_weight_tensor(models::indefinite(3))},
  };
  std::size_t vectors = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto rels = generate_4t(n);
    vectors += rels.vectors.size();
    for (const auto& [name, h] : tensors) {
      WeightSystemCache w(h);
      for (std::size_t i = 0; i < rels.vectors.size(); ++i)
        if (const Rational v = w(rels.vectors[i]); v != 0)
          log.fail(name + " gives " + to_string(v) + " on 4T vector " + std::to_string(i) + " at n=" + std::to_string(n));
    }
  }
  log.expect(vectors > 0, "no relation vectors generated");
  log.note(std::to_string(vectors) + " relation vectors x " + std::to_string(tensors.size()) + " tensors");
  return log.finish(2, "4T soundness of weight systems (n<=4)");
}

/// Tensor-level identities for builtin and constant-curvature tensors.
inline Outcome tensor_level_identities() {
  detail::Log log;
  const std::vector<std::pair<std::string, Representation>> reps{
      {"sl2", builtin_sl2()}, {"so2", builtin_so(2)}, {"so3", builtin_so(3)}, {"so4", builtin_so(4)}, {"abelian2", builtin_abelian(2, 2)}};
  for (const auto& [name, rep] : reps) {
    const WeightTensor h = weight_tensor_of_rep(rep);
    if (auto r = validate_symmetry(h); !r) log.fail(name + " rho(C) not leg-symmetric");
    if (auto r = check_4t_tensor(h); !r) log.fail(name + " rho(C) fails 4T at " + format_witness(r.witness));
    if (auto r = check_structure_tensor_identity(rep); !r) log.fail(name + " structure-tensor identity: " + r.what);
  }

  std::vector<detail::NamedModel> curv = detail::constant_curvature_family();
  curv.push_back({"flat d=3", models::flat(3)});
  curv.push_back({"S2 x S2", models::sphere_pair()});
  const std::size_t constant_count = curv.size();
  curv.push_back({"Bianchi-violating d=4", models::bianchi_violating()});
  curv.push_back({"anisotropic d=3", models::anisotropic(1, 2, 3)});
  std::size_t non_parallel = 0;
  for (std::size_t i = 0; i < curv.size(); ++i) {
    const auto& [name, m] = curv[i];
    const bool tensor_ok = static_cast<bool>(check_4t_tensor(to_weight_tensor(m)));
    const bool parallel_ok = static_cast<bool>(check_parallel_4t(m));
    if (i < constant_count) log.expect(tensor_ok, name + ": Hhat fails the tensor 4T identity");
    log.expect(tensor_ok == parallel_ok, name + ": parallel check and tensor 4T check disagree");
    non_parallel += parallel_ok ? 0 : 1;
  }
  log.expect(non_parallel > 0, "no curvature model exercises a failing parallel check");
  log.note(std::to_string(reps.size()) + " representations, " + std::to_string(curv.size()) + " curvature models (" +
           std::to_string(non_parallel) + " non-parallel)");
  return log.finish(3, "tensor-level 4T, parallel curvature and structure-tensor identities");
}

/// Holonomy algebra, symmetric triple and rho(C_h) = Hhat across the model family.
inline Outcome holonomy_and_triple() {
  detail::Log log;
  {
    const CurvatureModel s3 = models::unit_sphere(3);
    const HolonomyAlgebra h = holonomy_algebra(s3);
    log.expect(h.dim() == 3, "S3: dim h = " + std::to_string(h.dim()));
    log.expect(isomorphism_to_so(h, 3).has_value(), "S3: h not shown isomorphic to so3");
    log.expect(h.form_nondegenerate(), "S3: B_h degenerate");
    const auto sig = signature(h.form);
    log.expect(sig.negative == 3, "S3: B_h not negative definite");
    const SymmetricTriple t = symmetric_triple(s3);
    log.expect(t.dim() == 6, "S3: triple has dimension " + std::to_string(t.dim()));
    log.expect(static_cast<bool>(check_jacobi(t.bracket)), "S3: Jacobi fails on the triple");
    const auto ts = signature(t.form);
    log.expect(ts.negative == 3 && ts.positive == 3, "S3: triple form signature is not (3,3)");
    if (auto r = verify_lie_type(s3); !r) log.fail("S3: " + r.what + " at " + format_witness(r.witness));
  }
  std::size_t models_checked = 1;
  for (const auto& [name, m] : detail::constant_curvature_family()) {
    try {
      const SymmetricTriple t = symmetric_triple(m);
      const std::size_t d = m.dim();
      log.expect(t.h_dim() == d * (d - 1) / 2, name + ": dim h = " + std::to_string(t.h_dim()));
      if (auto r = verify_lie_type(m); !r) log.fail(name + ": " + r.what + " at " + format_witness(r.witness));
      if (m.metric() == Matrix::identity(d))
        log.expect(isomorphism_to_so(t.h, d).has_value(), name + ": h not shown isomorphic to so" + std::to_string(d));
    } catch (const std::exception& e) {
      log.fail(name + ": " + e.what());
    }
    ++models_checked;
  }
  log.note(std::to_string(models_checked) + " models; S3 gives dim h = 3 ~ so3");
  return log.finish(4, "holonomy algebra, symmetric triple and rho(C_h) = Hhat");
}

/// Expects sl2 with the symplectic form to fail Bianchi only, and so3 with B_V = I to round-trip.
inline Outcome realizability() {
  detail::Log log;
  {
    const Representation sl2 = builtin_sl2();
    const Matrix omega{{0, 1}, {-1, 0}};
    const RealizabilityVerdict v = rep_curvature_symmetries(sl2, omega);
    const Array4& r = v.lowered;
    std::string bianchi = "holds";
    for (std::size_t a = 0; a < 2 && bianchi == "holds"; ++a)
      for (std::size_t b = 0; b < 2 && bianchi == "holds"; ++b)
        for (std::size_t c = 0; c < 2 && bianchi == "holds"; ++c)
          for (std::size_t d = 0; d < 2 && bianchi == "holds"; ++d)
            if (r(a, b, c, d) + r(b, c, a, d) + r(c, a, b, d) != 0) bianchi = "fails at " + format_witness({a, b, c, d});
    if (v.status == RealizabilityStatus::fail_bianchi) {
      log.note("sl2 fails Bianchi at " + format_witness(v.witness));
    } else {
      // the lowered tensor is symmetric in (a,b) whenever B_V is antisymmetric and rho preserves it
      log.fail("sl2/symplectic: expected skew to hold and Bianchi to fail, got " + to_string(v.status) + " at " +
               format_witness(v.witness) + " (Bianchi sum " + bianchi + ")");
    }
  }
  {
    const Representation so3 = builtin_so(3);
    const Matrix id = Matrix::identity(3);
    const RealizabilityVerdict v = rep_curvature_symmetries(so3, id);
    log.expect(v.status == RealizabilityStatus::pass, "so3/I verdict is " + to_string(v.status));
    if (v.status == RealizabilityStatus::pass) {
      const SymmetricTriple t = triple_from_rep(so3, id);
      const WeightTensor back = weight_tensor_of_rep(holonomy_representation(t.h));
      log.expect(back == weight_tensor_of_rep(so3), "so3 round trip does not reproduce rho(C)");
      log.note("so3 round-trips with dim h = " + std::to_string(t.h_dim()));
    }
  }
  return log.finish(5, "realizability by curvature symmetries");
}

/// Framed and unframed dimensions for n <= 4, library versus dense oracle.
inline Outcome dimension_tables() {
  detail::Log log;
  const std::size_t framed[] = {1, 1, 2, 3, 6};
  const std::size_t unframed[] = {1, 0, 1, 1, 3};
  for (std::size_t n = 0; n <= 4; ++n) {
    const std::size_t lf = quotient_dimension(n, Framing::framed);
    const std::size_t lu = quotient_dimension(n, Framing::unframed);
    const std::size_t of = oracle::quotient_dimension(n, Framing::framed);
    const std::size_t ou = oracle::quotient_dimension(n, Framing::unframed);
    log.expect(lf == of && lf == framed[n], "n=" + std::to_string(n) + " framed: library " + std::to_string(lf) +
                                                ", oracle " + std::to_string(of) + ", expected " + std::to_string(framed[n]));
    log.expect(lu == ou && lu == unframed[n], "n=" + std::to_string(n) + " unframed: library " + std::to_string(lu) +
                                                  ", oracle " + std::to_string(ou) + ", expected " + std::to_string(unframed[n]));
  }
  log.note("framed 1,1,2,3,6; unframed 1,0,1,1,3");
  return log.finish(6, "dimension tables (n<=4)");
}

/// Sweep contraction equals the naive sum.
inline Outcome oracle_equivalence(std::uint32_t seed = 20240611) {
  detail::Log log;
  std::vector<std::pair<std::string, WeightTensor>> tensors{
      {"sl2", weight_tensor_of_rep(builtin_sl2())},
      {"so2", weight_tensor_of_rep(builtin_so(2))},
      {"so3", weight_tensor_of_rep(builtin_so(3))},
      {"abelian1", weight_tensor_of_rep(builtin_abelian(1))},
      {"id1", identity_tensor(1)},
      {"id2", identity_tensor(2)},
      {"id3", identity_tensor(3)},
      {"S2", to_weight_tensor(models::unit_sphere(2))},
      {"S3", to_weight_tensor(models::unit_sphere(3))},
      {"H3", to_weight_tensor(models::hyperbolic(3))},
      {"indefinite", to_weight_tensor(models::indefinite(3))},
  };
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (int k = 0; k < 100; ++k) {
    WeightTensor h(2);
    h.for_each_index([&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
      if (std::tie(a, b) <= std::tie(c, d)) {
        h(a, b, c, d) = Rational(num(rng), den(rng));
        h(a, b, c, d).canonicalize();
        h(c, d, a, b) = h(a, b, c, d);
      }
    });
    tensors.emplace_back("random#" + std::to_string(k), std::move(h));
  }
  const auto all = detail::diagrams_up_to(3);
  std::size_t pairs = 0;
  for (const auto& [name, h] : tensors)
    for (const auto& d : all) {
      const Rational fast = evaluate(h, d);
      const Rational slow = evaluate_naive(h, d);
      if (fast != slow) log.fail(name + " on " + detail::show(d) + ": " + to_string(fast) + " vs " + to_string(slow));
      ++pairs;
    }
  log.note(std::to_string(pairs) + " (tensor, diagram) pairs");
  return log.finish(7, "sweep contraction equals naive sum");
}

/// Enumeration counts, coproduct laws and product cut-independence modulo 4T.
inline Outcome combinatorial_sanity() {
  detail::Log log;
  const std::size_t expected[] = {1, 1, 2, 5, 18};
  for (std::size_t n = 0; n <= 4; ++n) {
    const std::size_t lib = enumerate_diagrams(n).size();
    const std::size_t brute = oracle::orbit_count(n);
    log.expect(lib == brute && lib == expected[n],
               "n=" + std::to_string(n) + ": enumerated " + std::to_string(lib) + ", brute force " + std::to_string(brute));
  }

  const ChordDiagram empty;
  for (const auto& d : detail::diagrams_up_to(4)) {
    const auto delta = coproduct(d);
    FormalSum<ChordDiagram> left;
    FormalSum<ChordDiagram> right;
    for (const auto& [pair, c] : delta) {
      if (pair.first == empty) left.add(pair.second, c);
      if (pair.second == empty) right.add(pair.first, c);
    }
    log.expect(left == FormalSum<ChordDiagram>(d, 1) && right == FormalSum<ChordDiagram>(d, 1), detail::show(d) + ": counit law fails");

    FormalSum<DiagramTriple> lhs;
    FormalSum<DiagramTriple> rhs;
    for (const auto& [pair, c] : delta) {
      for (const auto& [inner, c2] : coproduct(pair.first)) lhs.add({inner.first, inner.second, pair.second}, c * c2);
      for (const auto& [inner, c2] : coproduct(pair.second)) rhs.add({pair.first, inner.first, inner.second}, c * c2);
    }
    log.expect(lhs == rhs, detail::show(d) + ": coassociativity fails");
  }

  // every cut pair for (2-chord diagram) x theta lands in one class modulo 4T
  const ChordDiagram theta = ChordDiagram::parse("AA");
  const RelationSpan span3(3, Framing::framed);
  std::size_t products = 0;
  for (const auto& x : enumerate_diagrams(2)) {
    const ChordDiagram base = product(x, theta, 0, 0);
    for (std::size_t ca = 0; ca <= x.points(); ++ca)
      for (std::size_t cb = 0; cb <= theta.points(); ++cb) {
        DiagramSum diff(product(x, theta, ca, cb), 1);
        diff.add(base, -1);
        log.expect(span3.contains(diff), detail::show(x) + " x AA: cuts (" + std::to_string(ca) + "," + std::to_string(cb) +
                                             ") differ from (0,0) outside the 4T span");
        ++products;
      }
  }
  log.note("counts 1,1,2,5,18; coproduct laws on 27 diagrams; " + std::to_string(products) + " cut choices");
  return log.finish(8, "enumeration, coproduct laws and product cut-independence");
}

inline std::vector<std::function<Outcome()>> criteria() {
  return {three_way_equality,   four_term_soundness, tensor_level_identities, holonomy_and_triple,
          realizability,       dimension_tables,     [] { return oracle_equivalence(); }, combinatorial_sanity};
}

/// Runs every criterion, printing one PASS/FAIL line each. Returns true iff all pass.
inline bool run_all(std::ostream& out) {
  bool all = true;
  const auto list = criteria();
  for (std::size_t i = 0; i < list.size(); ++i) {
    Outcome o;
    try {
      o = list[i]();
    } catch (const std::exception& e) {
      o.id = static_cast<int>(i + 1);
      o.name = "criterion " + std::to_string(i + 1);
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.ok;
    out << (o.ok ? "PASS" : "FAIL") << " [" << o.id << "] " << o.name;
    if (!o.detail.empty()) out << " -- " << o.detail;
    out << '\n';
  }
  return all;
}

}  // namespace chordweight::acceptance
