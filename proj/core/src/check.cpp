#include "weakorder/check.hpp"

#include "weakorder/gen.hpp"
#include "weakorder/io.hpp"
#include "weakorder/oracle.hpp"

#include <chrono>
#include <numeric>

namespace weakorder {

namespace {

struct Failure {
  std::string witness;
};

struct Ops {
  JoinFn join_fn;

  LatticeElement join(const LatticeElement& x, const LatticeElement& y) const {
    return join_fn(x, y);
  }
  LatticeElement meet(const LatticeElement& x, const LatticeElement& y) const {
    return complement(join(complement(x), complement(y)));
  }
  bool leq(const LatticeElement& x, const LatticeElement& y) const { return join(x, y) == y; }
  LatticeElement join_all(const Frame& reference, const std::vector<LatticeElement>& xs) const {
    auto acc = bottom(reference);
    for (const auto& x : xs) acc = join(acc, x);
    return acc;
  }
};

Ops ops_for(const CheckOptions& opts) {
  if (opts.join) return Ops{opts.join};
  return Ops{[](const LatticeElement& x, const LatticeElement& y) { return join(x, y); }};
}

std::string show(const LatticeElement& x) {
  auto s = serialize_element(x);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

struct Witness {
  std::string text;
  Witness& add(const std::string& name, const LatticeElement& x) {
    text += (text.empty() ? "" : " ") + name + "=" + show(x);
    return *this;
  }
  Witness& add(const std::string& name, const IntVector& v) {
    text += (text.empty() ? "" : " ") + name + "=" + serialize_vector(v);
    return *this;
  }
  Witness& note(const std::string& s) {
    text += (text.empty() ? "" : " ") + s;
    return *this;
  }
};

void expect(bool ok, const std::string& what, Witness w) {
  if (!ok) throw Failure{what + ": " + w.text};
}

void expect_valid(const LatticeElement& z, const std::string& what, Witness w) {
  bool ok = z.cone().is_valid() && z.reference().is_valid();
  if (ok) {
    try {
      LatticeElement(z.reference(), z.cone());
    } catch (const Error&) {
      ok = false;
    }
  }
  expect(ok, what + " produced an invalid element", w.add("result", z));
}

template <class Body>
SuiteResult run_suite(const std::string& name, const CheckOptions& opts, Body body) {
  SuiteResult r;
  r.name = name;
  if (opts.iters == 0) {
    r.skipped = true;
    return r;
  }
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const Failure& f) {
    r.passed = false;
    r.witness = f.witness;
  } catch (const std::exception& e) {
    r.passed = false;
    r.witness = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Rng suite_rng(const CheckOptions& opts, std::uint64_t tag, std::size_t dim) {
  return Rng(mix_seed(mix_seed(opts.seed, tag), dim));
}

template <class Case>
void for_each_case(const CheckOptions& opts, std::uint64_t tag, SuiteResult& r, Case one_case) {
  for (std::size_t dim = opts.min_dim; dim <= opts.max_dim; ++dim) {
    Rng rng = suite_rng(opts, tag, dim);
    for (std::size_t i = 0; i < opts.iters; ++i) {
      one_case(rng, dim);
      ++r.cases;
    }
  }
}

void check_arc_pair(const Ops& ops, const LatticeElement& x, const ArcClass& ax,
                    const LatticeElement& y, const ArcClass& ay) {
  // Witnesses are only serialized on failure; this runs on every family pair.
  auto fail = [&](const std::string& what, const LatticeElement* result, const ArcClass* want) {
    Witness w;
    w.add("X", x).add("Y", y);
    if (result) w.add("result", *result);
    if (want) w.note("expected " + to_string(*want));
    throw Failure{what + ": " + w.text};
  };
  auto j = ops.join(x, y);
  auto want_join = arc_join(ax, ay);
  if (!(classify(j) == want_join)) fail("join disagrees with arc oracle", &j, &want_join);
  auto m = ops.meet(x, y);
  auto want_meet = arc_meet(ax, ay);
  if (!(classify(m) == want_meet)) fail("meet disagrees with arc oracle", &m, &want_meet);
  if ((j == y) != arc_leq(ax, ay)) fail("leq disagrees with arc oracle", nullptr, nullptr);
}

void check_arc_complement(const LatticeElement& x, const ArcClass& ax) {
  expect(classify(complement(x)) == arc_complement(ax), "complement disagrees with arc oracle",
         Witness().add("X", x));
}

}  // namespace

std::vector<LatticeElement> planar_family(std::int64_t bound) {
  std::vector<LatticeElement> out;
  for (std::int64_t p = -bound; p <= bound; ++p)
    for (std::int64_t q = -bound; q <= bound; ++q) {
      if (std::gcd(p, q) != 1) continue;
      IntVector v2{static_cast<long>(p), static_cast<long>(q)};
      for (int s : {1, -1}) {
        IntVector v1{static_cast<long>(-s * q), static_cast<long>(s * p)};
        out.push_back(standard_element(Frame(2, {v1, v2})));
      }
    }
  return out;
}

SuiteResult check_oracle_equivalence(const CheckOptions& opts) {
  return run_suite("oracle-equivalence", opts, [&](SuiteResult& r) {
    Ops ops = ops_for(opts);
    Rng rng = suite_rng(opts, 1, 2);
    for (std::size_t i = 0; i < opts.iters; ++i, ++r.cases) {
      auto x = random_structured_element(rng, 2, opts.bound);
      auto y = random_structured_element(rng, 2, opts.bound);
      check_arc_complement(x, classify(x));
      check_arc_pair(ops, x, classify(x), y, classify(y));
    }
    if (opts.arc_bound > 0) {
      auto family = planar_family(opts.arc_bound);
      std::vector<ArcClass> arcs;
      for (const auto& x : family) {
        arcs.push_back(classify(x));
        check_arc_complement(x, arcs.back());
      }
      for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
          check_arc_pair(ops, family[i], arcs[i], family[j], arcs[j]);
          ++r.cases;
        }
    }
  });
}

SuiteResult check_cone_properties(const CheckOptions& opts) {
  return run_suite("cone-properties", opts, [&](SuiteResult& r) {
    for_each_case(opts, 2, r, [&](Rng& rng, std::size_t dim) {
      auto f = random_frame(rng, dim, opts.bound);
      auto nf = negate(f);
      const auto& u = support_normal(f);
      Witness w;
      w.add("F", standard_element(f));
      expect(cone_contains(f, ExactKernel::negated(u)), "-support_normal not in cone", w);
      expect(negate(nf) == f, "negate is not an involution", w);
      for (std::size_t k = 0; k < opts.rays / 10 + 1; ++k) {
        auto x = random_ray(rng, dim, opts.bound);
        bool in = cone_contains(f, x);
        expect(in != cone_contains(nf, x), "not exactly one of D, -D contains ray",
               Witness(w).add("ray", x));
        if (in) expect(sgn(dot(x, u)) <= 0, "member outside support halfspace", Witness(w).add("ray", x));
        IntVector scaled = x;
        for (auto& c : scaled) c *= 3;
        expect(lex_sign(scaled, f) == lex_sign(x, f), "lex_sign not scale invariant",
               Witness(w).add("ray", x));
      }
    });
  });
}

SuiteResult check_lattice_axioms(const CheckOptions& opts) {
  return run_suite("lattice-axioms", opts, [&](SuiteResult& r) {
    Ops ops = ops_for(opts);
    for_each_case(opts, 3, r, [&](Rng& rng, std::size_t dim) {
      auto x = random_structured_element(rng, dim, opts.bound);
      auto y = random_structured_element(rng, dim, opts.bound);
      auto z = random_structured_element(rng, dim, opts.bound);
      Witness w;
      w.add("X", x).add("Y", y).add("Z", z);
      auto xy = ops.join(x, y);
      expect_valid(xy, "join", w);
      auto mxy = ops.meet(x, y);
      expect_valid(mxy, "meet", w);
      expect(ops.join(x, x) == x, "join not idempotent", w);
      expect(ops.meet(x, x) == x, "meet not idempotent", w);
      expect(xy == ops.join(y, x), "join not commutative", w);
      expect(mxy == ops.meet(y, x), "meet not commutative", w);
      expect(ops.join(xy, z) == ops.join(x, ops.join(y, z)), "join not associative", w);
      expect(ops.meet(mxy, z) == ops.meet(x, ops.meet(y, z)), "meet not associative", w);
      expect(ops.join(x, mxy) == x, "absorption join(X, meet(X,Y)) != X", w);
      expect(ops.meet(x, xy) == x, "absorption meet(X, join(X,Y)) != X", w);
      expect(ops.leq(x, x), "leq not reflexive", w);
      if (ops.leq(x, y) && ops.leq(y, z)) expect(ops.leq(x, z), "leq not transitive", w);
      if (ops.leq(x, y) && ops.leq(y, x)) expect(x == y, "leq not antisymmetric", w);
    });
  });
}

SuiteResult check_duality(const CheckOptions& opts) {
  return run_suite("duality", opts, [&](SuiteResult& r) {
    Ops ops = ops_for(opts);
    for_each_case(opts, 4, r, [&](Rng& rng, std::size_t dim) {
      auto x = random_structured_element(rng, dim, opts.bound);
      auto y = random_structured_element(rng, dim, opts.bound);
      // Every other pair is comparable by construction.
      if (r.cases % 2 == 1) y = ops.join(x, y);
      Witness w;
      w.add("X", x).add("Y", y);
      expect(complement(complement(x)) == x, "complement not an involution", w);
      expect_valid(complement(x), "complement", w);
      expect(ops.leq(x, y) == ops.leq(complement(y), complement(x)),
             "complement is not order-reversing", w);
    });
  });
}

SuiteResult check_upper_bound(const CheckOptions& opts) {
  return run_suite("upper-bound", opts, [&](SuiteResult& r) {
    Ops ops = ops_for(opts);
    for_each_case(opts, 5, r, [&](Rng& rng, std::size_t dim) {
      auto x = random_structured_element(rng, dim, opts.bound);
      auto y = random_structured_element(rng, dim, opts.bound);
      auto z = ops.join(x, y);
      for (std::size_t k = 0; k < opts.rays; ++k) {
        auto ray = random_ray(rng, dim, opts.bound);
        if ((member(ray, x) || member(ray, y)) && !member(ray, z))
          throw Failure{"member of X or Y missing from join: " +
                        Witness().add("X", x).add("Y", y).add("join", z).add("ray", ray).text};
      }
    });
  });
}

SuiteResult check_minimality(const CheckOptions& opts) {
  return run_suite("minimality", opts, [&](SuiteResult& r) {
    Ops ops = ops_for(opts);
    for_each_case(opts, 6, r, [&](Rng& rng, std::size_t dim) {
      auto x = random_structured_element(rng, dim, opts.bound);
      auto y = random_structured_element(rng, dim, opts.bound);
      auto extra = random_structured_element(rng, dim, opts.bound);
      auto w = ops.join(x, ops.join(y, extra));
      expect(ops.leq(ops.join(x, y), w), "join(X,Y) not below an upper bound",
             Witness().add("X", x).add("Y", y).add("R", extra).add("W", w));
    });
  });
}

SuiteResult check_jtp(const CheckOptions& opts) {
  return run_suite("jtp", opts, [&](SuiteResult& r) {
    Ops ops = ops_for(opts);
    for_each_case(opts, 7, r, [&](Rng& rng, std::size_t dim) {
      auto b = random_structured_element(rng, dim, opts.bound);
      auto not_b = complement(b);
      auto size = static_cast<std::size_t>(rng.uniform(1, 4));
      std::vector<LatticeElement> family;
      Witness w;
      w.add("B", b);
      for (std::size_t i = 0; i < size; ++i) {
        auto a = ops.meet(random_structured_element(rng, dim, opts.bound), not_b);
        w.add("A" + std::to_string(i), a);
        family.push_back(std::move(a));
      }
      auto joined = ops.join_all(b.reference(), family);
      expect(ops.leq(joined, not_b), "join of a family disjoint from B meets B",
             w.add("join", joined));
    });
  });
}

SuiteResult check_bottom_uniqueness(const CheckOptions& opts) {
  return run_suite("bottom-uniqueness", opts, [&](SuiteResult& r) {
    for_each_case(opts, 8, r, [&](Rng& rng, std::size_t dim) {
      auto ref = Frame::standard(dim);
      expect(is_bottom(bottom(ref)), "bottom is not bottom", Witness());
      expect(is_bottom(complement(top(ref))), "complement(top) is not bottom", Witness());
      auto x = random_element(rng, dim, opts.bound);
      Witness w;
      w.add("X", x);
      expect(is_bottom(x) == (x.cone() == negate(x.reference())), "is_bottom disagrees with frame test", w);
      if (!is_bottom(x)) {
        auto found = subset_falsifier(x, bottom(ref), 10 * opts.rays, rng.next(), opts.bound);
        expect(found.has_value(), "no member ray found for a non-bottom element", w);
      }
      auto stray = subset_falsifier(bottom(ref), bottom(ref), opts.rays / 10 + 1, rng.next());
      expect(!stray.has_value(), "bottom has a member", Witness());
    });
  });
}

SuiteResult check_projection(const CheckOptions& opts) {
  return run_suite("projection", opts, [&](SuiteResult& r) {
    for_each_case(opts, 9, r, [&](Rng& rng, std::size_t dim) {
      auto x = random_structured_element(rng, dim, opts.bound);
      std::vector<IntVector> gens;
      switch (r.cases % 3) {
        case 0:
          for (std::size_t i = 0; i + 1 < dim; ++i) gens.push_back(unit_vector(dim, i));
          break;
        case 1: {
          auto w = random_ray(rng, dim, opts.bound);
          gens = Subspace::whole(dim).hyperplane(w).basis();
          break;
        }
        default: {
          auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(dim) - 1));
          for (std::size_t i = 0; i < k; ++i) gens.push_back(random_ray(rng, dim, opts.bound));
        }
      }
      auto sub = Subspace::spanned_by(dim, gens);
      if (sub.dim() == 0) return;
      auto xr = restrict(x, sub);
      Witness w;
      w.add("X", x);
      for (std::size_t i = 0; i < sub.dim(); ++i) w.add("S" + std::to_string(i), sub.basis()[i]);
      expect_valid(xr, "restrict", w);
      expect(xr.rank() == sub.dim() && Subspace::span_of(xr.cone()) == sub,
             "restriction does not span the subspace", w);
      for (std::size_t k = 0; k < opts.rays; ++k) {
        auto ray = random_ray_in(rng, sub, opts.bound);
        expect(member(ray, xr) == member(ray, x), "restriction membership disagrees",
               Witness(w).add("ray", ray));
      }
    });
  });
}

SuiteResult check_canonicalization(const CheckOptions& opts) {
  return run_suite("canonicalization", opts, [&](SuiteResult& r) {
    for_each_case(opts, 10, r, [&](Rng& rng, std::size_t dim) {
      auto basis = random_basis(rng, dim, opts.bound);
      auto f = frame_from_basis(std::span<const IntVector>(basis));
      std::vector<Vector> moved;
      for (const auto& b : basis) moved.push_back(to_rational(b));
      for (auto& b : moved) {
        Rational s = make_rational(rng.uniform(1, 9), rng.uniform(1, 9));
        for (auto& c : b) c *= s;
      }
      for (std::size_t j = 1; j < dim; ++j) {
        auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(j) - 1));
        Rational c = make_rational(rng.uniform(-9, 9), rng.uniform(1, 9));
        for (std::size_t t = 0; t < dim; ++t) moved[j][t] -= c * moved[i][t];
      }
      Witness w;
      w.add("F", standard_element(f));
      for (std::size_t i = 0; i < dim; ++i) w.add("b" + std::to_string(i), basis[i]);
      expect(frame_from_basis(std::span<const Vector>(moved)) == f,
             "canonical frame changed under rescaling/shearing", w);
      for (std::size_t k = 0; k < opts.rays / 50 + 1; ++k) {
        auto x = random_ray(rng, dim, opts.bound);
        expect(basis_lex_sign(x, basis) == lex_sign(x, f),
               "frame and generating basis disagree on a ray", Witness(w).add("ray", x));
      }
    });
  });
}

SuiteResult check_falsifier_consistency(const CheckOptions& opts) {
  return run_suite("falsifier-consistency", opts, [&](SuiteResult& r) {
    Ops ops = ops_for(opts);
    for_each_case(opts, 11, r, [&](Rng& rng, std::size_t dim) {
      auto x = random_structured_element(rng, dim, opts.bound);
      auto y = ops.join(x, random_structured_element(rng, dim, opts.bound));
      if (!ops.leq(x, y)) return;
      auto found = subset_falsifier(x, y, opts.rays, rng.next(), opts.bound);
      if (found)
        throw Failure{"falsifier contradicts leq: " +
                      Witness().add("X", x).add("Y", y).add("ray", *found).text};
    });
  });
}

std::vector<SuiteResult> run_all_checks(const CheckOptions& opts) {
  return {
      check_oracle_equivalence(opts), check_cone_properties(opts),  check_lattice_axioms(opts),
      check_duality(opts),            check_upper_bound(opts),      check_minimality(opts),
      check_jtp(opts),                check_bottom_uniqueness(opts), check_projection(opts),
      check_canonicalization(opts),   check_falsifier_consistency(opts),
  };
}

}  // namespace weakorder
