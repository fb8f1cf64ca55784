#include "cubecat/checks.hpp"

#include <algorithm>
#include <set>

#include "cubecat/catalog.hpp"
#include "cubecat/cubes.hpp"
#include "cubecat/standard_cats.hpp"
#include "cubecat/ternary.hpp"
#include "cubecat/twisted.hpp"

namespace cubecat {

namespace {

using Params = std::map<std::string, std::string>;

template <class Body>
CheckReport run_check(std::string name, Params params, Body&& body) {
  detail::Stopwatch clock;
  CheckReport report;
  report.name = std::move(name);
  report.parameters = std::move(params);
  try {
    body(report);
  } catch (const CapacityError& e) {
    report.fail(std::string("capacity: ") + e.what());
    report.capacity_exceeded = true;
  } catch (const std::exception& e) {
    report.fail(std::string("exception: ") + e.what());
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

Params dims(const char* key, int value) { return {{key, std::to_string(value)}}; }

std::string hom(const char* cat, int m, int n) { return detail::hom_name(cat, m, n); }

template <class T>
bool contains(const std::vector<T>& items, const T& x) {
  return std::find(items.begin(), items.end(), x) != items.end();
}

}  // namespace

CheckReport check_rec_nonrec(int max_n) {
  return run_check("rec-nonrec-agreement", dims("max_n", max_n), [&](CheckReport& r) {
    for (const CubeKind kind : {CubeKind::Standard, CubeKind::Twisted}) {
      for (int n = 0; n <= max_n && r.passed; ++n) {
        const Graph rec = cube_rec(kind, n);
        const Graph nonrec = cube_nonrec(kind, n).graph();
        if (!graph_isomorphic(rec, nonrec)) {
          r.fail(to_string(kind) + " cube " + std::to_string(n) + ": recursive and closed-form graphs are not isomorphic");
        }
        ++r.counts["isomorphic"];
        if (rec == nonrec) ++r.counts["identical"];
      }
    }
  });
}

CheckReport check_cube_shapes(int max_n) {
  return run_check("cube-shapes", dims("max_n", max_n), [&](CheckReport& r) {
    for (int n = 0; n <= max_n && r.passed; ++n) {
      const std::size_t vertices = std::size_t{1} << n;
      const std::size_t edges = vertices + (n == 0 ? 0 : static_cast<std::size_t>(n) * (vertices / 2));
      for (const CubeKind kind : {CubeKind::Standard, CubeKind::Twisted}) {
        const auto g = cube(kind, n);
        if (g->size() != vertices || g->edge_count() != edges) {
          r.fail(to_string(kind) + " cube " + std::to_string(n) + " has " + std::to_string(g->size()) +
                 " vertices and " + std::to_string(g->edge_count()) + " edges");
        }
      }
      if (!graph_isomorphic(undirected(*cube(CubeKind::Standard, n)), undirected(*cube(CubeKind::Twisted, n)))) {
        r.fail("C^" + std::to_string(n) + " and T^" + std::to_string(n) + " differ as undirected graphs");
      }
      ++r.counts["dimensions"];
    }
  });
}

CheckReport check_bchop_graphmeet(int max_dim, int max_compose_dim) {
  IsomorphismOptions options;
  options.max_dim = max_dim;
  options.max_compose_dim = max_compose_dim;
  return check_isomorphism<BchMorphism, GraphMorphism>(
      bchop_category(), graphmeet_category(), [](const BchMorphism& a) { return bchop_to_graphmeet(a); },
      [](const GraphMorphism& g) { return graphmeet_to_bchop(g); }, options);
}

CheckReport check_graphmeet_structured(int max_dim) {
  return run_check("graphmeet-structured-vs-naive", dims("max_dim", max_dim), [&](CheckReport& r) {
    for (int m = 0; m <= max_dim && r.passed; ++m) {
      for (int n = 0; n <= max_dim && r.passed; ++n) {
        const auto structured = enumerate_graphmeet(m, n);
        if (structured != enumerate_graphmeet_naive(m, n)) {
          r.fail(hom("graphmeet", m, n) + ": structured enumeration differs from the naive filter");
        }
        r.counts["arrows"] += structured.size();
      }
    }
  });
}

CheckReport check_graphmeet_graphdim(int max_dim) {
  return run_check("graphmeet-equals-graphdim", dims("max_dim", max_dim), [&](CheckReport& r) {
    for (int m = 0; m <= max_dim && r.passed; ++m) {
      for (int n = 0; n <= max_dim && r.passed; ++n) {
        const auto all = enumerate_graphcube(m, n);
        const BoundTable sm(*cube(CubeKind::Standard, m), BoundTable::Kind::Meet);
        const BoundTable tm(*cube(CubeKind::Standard, n), BoundTable::Kind::Meet);
        const BoundTable sj(*cube(CubeKind::Standard, m), BoundTable::Kind::Join);
        const BoundTable tj(*cube(CubeKind::Standard, n), BoundTable::Kind::Join);
        for (const auto& f : all) {
          const bool lattice = preserves_bounds(f, sm, tm) && preserves_bounds(f, sj, tj);
          const bool dimension = is_dimension_preserving(f);
          if (lattice != dimension) {
            r.fail(hom("graphcube", m, n) + ": " + f.str() + (lattice ? " preserves meets and joins but not dimensions"
                                                                       : " preserves dimensions but not meets and joins"));
            break;
          }
          if (lattice) ++r.counts["common"];
        }
        r.counts["candidates"] += all.size();
      }
    }
  });
}

CheckReport check_dimension_injective(int max_dim) {
  return run_check("dimension-preserving-implies-injective", dims("max_dim", max_dim), [&](CheckReport& r) {
    for (const CubeKind kind : {CubeKind::Standard, CubeKind::Twisted}) {
      for (int m = 0; m <= max_dim && r.passed; ++m) {
        for (int n = 0; n <= max_dim && r.passed; ++n) {
          const auto homs = kind == CubeKind::Standard ? enumerate_graphdim(m, n) : enumerate_twgraphdim(m, n);
          for (const auto& f : homs) {
            if (!is_dimension_injective(f)) {
              r.fail(to_string(kind) + " " + f.str() + " is dimension-preserving but not injective on dimensions");
              break;
            }
          }
          r.counts["arrows"] += homs.size();
        }
      }
    }
  });
}

CheckReport check_base_extension(int max_dim) {
  return run_check("base-extension", dims("max_dim", max_dim), [&](CheckReport& r) {
    for (int m = 0; m <= max_dim && r.passed; ++m) {
      for (int n = 0; n <= max_dim && r.passed; ++n) {
        const auto base_homs = enumerate_graph_homs(base_graph(m), cube(CubeKind::Standard, n));
        for (const auto& h : base_homs) {
          const GraphMorphism g = extend_base_morphism(h);
          if (restrict_to_base(g) != h) {
            r.fail("restricting the extension of " + h.str() + " does not give it back");
          } else if (!preserves_joins(g)) {
            r.fail("extension of " + h.str() + " does not preserve joins");
          } else if (preserves_meets(g) != preserves_meets(h)) {
            r.fail("extension of " + h.str() + " changes meet preservation");
          }
          if (!r.passed) break;
        }
        std::size_t join_preserving = 0;
        const BoundTable sj(*cube(CubeKind::Standard, m), BoundTable::Kind::Join);
        const BoundTable tj(*cube(CubeKind::Standard, n), BoundTable::Kind::Join);
        for (const auto& g : enumerate_graphcube(m, n)) join_preserving += preserves_bounds(g, sj, tj) ? 1 : 0;
        if (r.passed && join_preserving != base_homs.size()) {
          r.fail(std::to_string(join_preserving) + " join-preserving C^" + std::to_string(m) + " -> C^" +
                 std::to_string(n) + " but " + std::to_string(base_homs.size()) + " base morphisms");
        }
        r.counts["base_morphisms"] += base_homs.size();
      }
    }
  });
}

CheckReport check_transpose(int max_dim) {
  return run_check("partial-injection-transpose", dims("max_dim", max_dim), [&](CheckReport& r) {
    for (int m = 0; m <= max_dim && r.passed; ++m) {
      for (int n = 0; n <= max_dim && r.passed; ++n) {
        const auto ps = enumerate_partial_injections(m, n);
        std::vector<PartialInjection> images;
        for (const auto& p : ps) {
          const auto q = transpose_partial_injection(p);
          if (transpose_partial_injection(q) != p) {
            r.fail("transpose is not an involution at " + p.str());
            break;
          }
          images.push_back(q);
        }
        auto others = enumerate_partial_injections(n, m);
        std::sort(images.begin(), images.end());
        std::sort(others.begin(), others.end());
        if (r.passed && images != others) {
          r.fail("transpose is not a bijection between the hom-sets at (" + std::to_string(m) + "," + std::to_string(n) + ")");
        }
        r.counts["injections"] += ps.size();
      }
    }
  });
}

CheckReport check_total_order(int max_n) {
  return run_check("twisted-total-order", dims("max_n", max_n), [&](CheckReport& r) {
    for (int n = 0; n <= max_n && r.passed; ++n) {
      const auto g = cube(CubeKind::Twisted, n);
      const Preorder p = free_preorder(*g);
      if (!is_total_order(p)) {
        r.fail("free preorder of T^" + std::to_string(n) + " is not a total order");
        break;
      }
      for (const auto& u : g->vertices()) {
        const Vertex gu = order_g(u);
        if (hamiltonian_f(gu) != u) {
          r.fail("f(g(" + u.str() + ")) != " + u.str());
          break;
        }
        if (order_g(hamiltonian_f(u)) != u) {
          r.fail("g(f(" + u.str() + ")) != " + u.str());
          break;
        }
        for (const auto& v : g->vertices()) {
          if (p.leq(u, v) != (gu.value() <= order_g(v).value())) {
            r.fail("order_g is not an order isomorphism at (" + u.str() + ", " + v.str() + ") in T^" + std::to_string(n));
            break;
          }
        }
        if (!r.passed) break;
      }
      ++r.counts["dimensions"];
    }
  });
}

CheckReport check_outgoing_edges(int max_n) {
  return run_check("twisted-outgoing-edges", dims("max_n", max_n), [&](CheckReport& r) {
    for (int n = 0; n <= max_n && r.passed; ++n) {
      const auto g = cube(CubeKind::Twisted, n);
      std::vector<int> out_degree(g->size(), 0);
      std::vector<int> degree(g->size(), 0);
      for (const auto& [a, b] : g->edge_indices()) {
        if (a == b) continue;
        ++out_degree[a];
        ++degree[a];
        ++degree[b];
      }
      for (std::size_t i = 0; i < g->size(); ++i) {
        const Vertex& v = g->vertex(i);
        if (degree[i] != n || out_degree[i] != order_g(v).count_zeros()) {
          r.fail("vertex " + v.str() + " of T^" + std::to_string(n) + " has " + std::to_string(out_degree[i]) +
                 " outgoing edges but order number " + order_g(v).str());
          break;
        }
      }
      r.counts["vertices"] += g->size();
    }
  });
}

CheckReport check_hamiltonian(int max_n) {
  return run_check("twisted-hamiltonian-path", dims("max_n", max_n), [&](CheckReport& r) {
    for (int n = 0; n <= max_n && r.passed; ++n) {
      const auto g = cube(CubeKind::Twisted, n);
      const auto paths = brute_hamiltonian(*g);
      r.counts["paths_found"] += paths.size();
      if (paths.size() != 1) {
        r.fail("T^" + std::to_string(n) + " has " + std::to_string(paths.size()) + " Hamiltonian paths");
        break;
      }
      std::vector<Vertex> expected;
      for (Bits k = 0; k < (Bits{1} << n); ++k) expected.push_back(hamiltonian_f(n, k));
      if (paths.front() != expected) {
        r.fail("brute-force path of T^" + std::to_string(n) + " differs from hamiltonian_f");
        break;
      }
      const auto edges = hamiltonian_path(n);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!g->has_edge(edges[i].first, edges[i].second)) r.fail("hamiltonian_path step is not an edge");
        const bool is_new_dim = edge_dimension(edges[i].first, edges[i].second) == EdgeDimension(0);
        const bool midpoint = i + 1 == (std::size_t{1} << (n - 1));
        if (is_new_dim != midpoint) {
          r.fail("T^" + std::to_string(n) + " path has a dimension-0 edge away from the midpoint or none at it");
          break;
        }
      }
      if (n >= 1 && r.passed) {
        // First half: the (n-1)-path run backwards in the 0-copy; second half:
        // the (n-1)-path in the 1-copy.
        std::vector<Vertex> lower;
        for (Bits k = 0; k < (Bits{1} << (n - 1)); ++k) lower.push_back(hamiltonian_f(n - 1, k));
        const std::size_t half = lower.size();
        for (std::size_t i = 0; i < half && r.passed; ++i) {
          if (expected[i] != lower[half - 1 - i].prepend(false) || expected[half + i] != lower[i].prepend(true)) {
            r.fail("path of T^" + std::to_string(n) + " does not split into the two copies' paths");
          }
        }
      }
    }
  });
}

CheckReport check_unique_surjection(int max_dim) {
  return run_check("twisted-unique-surjection", dims("max_dim", max_dim), [&](CheckReport& r) {
    for (int m = 0; m <= max_dim && r.passed; ++m) {
      for (int n = 0; n <= max_dim && r.passed; ++n) {
        std::vector<GraphMorphism> surjective;
        for (auto& f : enumerate_twgraphdim(m, n)) {
          if (f.is_surjective()) surjective.push_back(std::move(f));
        }
        const std::size_t expected = m >= n ? 1 : 0;
        if (surjective.size() != expected) {
          r.fail(hom("twgraphdim", m, n) + " has " + std::to_string(surjective.size()) + " surjections");
        } else if (expected == 1 && surjective.front() != unique_surjection(m, n)) {
          r.fail("the surjection in " + hom("twgraphdim", m, n) + " is " + surjective.front().str() +
                 ", not the truncation");
        }
        r.counts["surjections"] += surjective.size();
      }
    }
  });
}

CheckReport check_face_injections(int max_dim) {
  return run_check("twisted-faces-are-injections", dims("max_dim", max_dim), [&](CheckReport& r) {
    for (int m = 0; m <= max_dim && r.passed; ++m) {
      for (int n = 0; n <= max_dim && r.passed; ++n) {
        std::vector<GraphMorphism> injective;
        for (auto& f : enumerate_twgraphdim(m, n)) {
          if (f.is_injective()) injective.push_back(std::move(f));
        }
        const auto fs = m <= n ? faces(n, m) : std::vector<Face>{};
        if (injective.size() != fs.size()) {
          r.fail(hom("twgraphdim", m, n) + " has " + std::to_string(injective.size()) + " injections but there are " +
                 std::to_string(fs.size()) + " faces");
          break;
        }
        for (const auto& face : fs) {
          const GraphMorphism inj = face_to_injection(face);
          if (!contains(injective, inj) || image_face(inj) != face) {
            r.fail("face " + face.str() + " does not give an injective dimension-preserving morphism with that image");
            break;
          }
        }
        r.counts["faces"] += fs.size();
      }
    }
  });
}

CheckReport check_factorisation(int max_dim) {
  return run_check("twisted-factorisation", dims("max_dim", max_dim), [&](CheckReport& r) {
    std::map<std::pair<int, int>, std::vector<GraphMorphism>> surj;
    std::map<std::pair<int, int>, std::vector<GraphMorphism>> inj;
    for (int a = 0; a <= max_dim; ++a) {
      for (int b = 0; b <= max_dim; ++b) {
        for (auto& f : enumerate_twgraphdim(a, b)) {
          if (f.is_surjective()) surj[{a, b}].push_back(f);
          if (f.is_injective()) inj[{a, b}].push_back(f);
        }
      }
    }
    for (int m = 0; m <= max_dim && r.passed; ++m) {
      for (int n = 0; n <= max_dim && r.passed; ++n) {
        for (const auto& f : enumerate_twgraphdim(m, n)) {
          std::size_t ways = 0;
          for (int k = 0; k <= max_dim; ++k) {
            for (const auto& s : surj[{m, k}]) {
              for (const auto& i : inj[{k, n}]) ways += compose(i, s) == f ? 1 : 0;
            }
          }
          if (ways != 1) {
            r.fail(f.str() + " factors in " + std::to_string(ways) + " ways");
            break;
          }
          const Factorization fac = factorize(f);
          if (compose(fac.injection, fac.surjection) != f || fac.injection != face_to_injection(image_face(f)) ||
              fac.k != image_face(f).dimension()) {
            r.fail("factorize(" + f.str() + ") is not the expected factorisation");
            break;
          }
          ++r.counts["factorised"];
        }
      }
    }
  });
}

CheckReport check_twisted_lattice(int max_dim) {
  return run_check("twisted-morphisms-preserve-meets-joins", dims("max_dim", max_dim), [&](CheckReport& r) {
    for (int m = 0; m <= max_dim && r.passed; ++m) {
      const BoundTable sm(*cube(CubeKind::Twisted, m), BoundTable::Kind::Meet);
      const BoundTable sj(*cube(CubeKind::Twisted, m), BoundTable::Kind::Join);
      for (int n = 0; n <= max_dim && r.passed; ++n) {
        const BoundTable tm(*cube(CubeKind::Twisted, n), BoundTable::Kind::Meet);
        const BoundTable tj(*cube(CubeKind::Twisted, n), BoundTable::Kind::Join);
        const auto homs = enumerate_twcubecat(m, n);
        for (const auto& f : homs) {
          if (!preserves_bounds(f, sm, tm) || !preserves_bounds(f, sj, tj)) {
            r.fail(hom("twcube", m, n) + ": " + f.str() + " does not preserve meets and joins");
            break;
          }
        }
        r.counts["arrows"] += homs.size();
      }
    }
  });
}

CheckReport check_fibre_sizes(int max_dim) {
  return run_check("twisted-fibre-sizes", dims("max_dim", max_dim), [&](CheckReport& r) {
    for (int m = 0; m <= max_dim && r.passed; ++m) {
      for (int n = 0; n <= max_dim && r.passed; ++n) {
        for (const auto& f : enumerate_twcubecat(m, n)) {
          const auto sizes = nonempty_fibre_sizes(f);
          const bool equal = std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end();
          const bool dimension = is_dimension_preserving(f);
          if (equal != dimension) {
            r.fail(hom("twcube", m, n) + ": " + f.str() +
                   (dimension ? " is dimension-preserving with unequal fibres" : " has equal fibres but is not dimension-preserving"));
            break;
          }
          if (dimension) {
            const int k = image_face(f).dimension();
            if (sizes.front() != (std::size_t{1} << (m - k))) {
              r.fail(f.str() + " has fibres of size " + std::to_string(sizes.front()));
              break;
            }
            ++r.counts["dimension_preserving"];
          }
          ++r.counts["arrows"];
        }
      }
    }
  });
}

CheckReport check_ternary_graphdim(int max_dim, int max_compose_dim, std::uint64_t sampled_pairs) {
  IsomorphismOptions options;
  options.max_dim = max_dim;
  options.max_compose_dim = max_compose_dim;
  options.sampled_pairs = sampled_pairs;
  return check_isomorphism<TernaryMorphism, GraphMorphism>(
      ternary_category(), twgraphdim_category(), [](const TernaryMorphism& t) { return ternary_to_graphdim(t); },
      [](const GraphMorphism& f) { return graphdim_to_ternary(f); }, options);
}

CheckReport check_semi_closure(int max_dim) {
  return run_check("semi-cube-closure", dims("max_dim", max_dim), [&](CheckReport& r) {
    for (int k = 0; k <= max_dim && r.passed; ++k) {
      for (int m = 0; m <= max_dim && r.passed; ++m) {
        for (int n = 0; n <= max_dim && r.passed; ++n) {
          for (const auto& f : enumerate_semi(k, m)) {
            for (const auto& g : enumerate_semi(m, n)) {
              if (!semi_ternary_check(ternary_compose(g, f))) {
                r.fail(g.str() + " ∘ " + f.str() + " leaves the semi-cube category");
                break;
              }
              ++r.counts["compositions"];
            }
            if (!r.passed) break;
          }
        }
      }
    }
  });
}

CheckReport check_tensor(int max_total) {
  return run_check("tensor-units", dims("max_total", max_total), [&](CheckReport& r) {
    const Vertex unit;
    for (int a = 0; a <= max_total; ++a) {
      for (const auto& x : all_vertices(a)) {
        if (monoidal_tensor(unit, x) != x || monoidal_tensor(x, unit) != x) {
          r.fail("ε is not a unit for " + display(x));
          return;
        }
      }
    }
    // Associativity is only recorded: complementing y changes its zero
    // parity whenever |y| is odd, so (0⊗0)⊗0 = 011 but 0⊗(0⊗0) = 010.
    for (int a = 0; a <= max_total; ++a) {
      for (int b = 0; a + b <= max_total; ++b) {
        for (int c = 0; a + b + c <= max_total; ++c) {
          for (const auto& x : all_vertices(a)) {
            for (const auto& y : all_vertices(b)) {
              for (const auto& z : all_vertices(c)) {
                const bool same = monoidal_tensor(monoidal_tensor(x, y), z) == monoidal_tensor(x, monoidal_tensor(y, z));
                ++r.counts[same ? "associative_triples" : "non_associative_triples"];
              }
            }
          }
        }
      }
    }
  });
}

std::vector<CheckReport> check_all_laws(int max_identity_dim, int max_assoc_dim) {
  std::vector<CheckReport> out;
  out.push_back(check_category_laws(bch_category(), max_identity_dim, max_assoc_dim));
  out.push_back(check_category_laws(bchop_category(), max_identity_dim, max_assoc_dim));
  out.push_back(check_category_laws(graphcube_category(), max_identity_dim, max_assoc_dim));
  out.push_back(check_category_laws(twcube_category(), max_identity_dim, max_assoc_dim));
  out.push_back(check_category_laws(graphmeet_category(), max_identity_dim, max_assoc_dim));
  out.push_back(check_category_laws(graphdim_category(), max_identity_dim, max_assoc_dim));
  out.push_back(check_category_laws(twgraphdim_category(), max_identity_dim, max_assoc_dim));
  out.push_back(check_category_laws(ternary_category(), max_identity_dim, max_assoc_dim));
  out.push_back(check_category_laws(semi_category(), max_identity_dim, max_assoc_dim));
  out.push_back(check_category_laws(untwisted_category(), max_identity_dim, max_assoc_dim));
  return out;
}

namespace {

std::vector<CheckReport> twisted_structure_checks(int max_dim) {
  return {check_total_order(std::min(max_dim + 2, 5)), check_hamiltonian(std::min(max_dim + 1, 4)),
          check_unique_surjection(max_dim), check_factorisation(max_dim),
          check_ternary_graphdim(max_dim, std::min(max_dim, 2), 0)};
}

class MutationGuard {
 public:
  ~MutationGuard() {
    mutation::set_twisted_parity_flip(true);
    mutation::set_ternary_xor(true);
  }
};

}  // namespace

CheckReport check_mutation_sensitivity(int max_dim) {
  return run_check("mutation-sensitivity", dims("max_dim", max_dim), [&](CheckReport& r) {
    const MutationGuard guard;
    auto failures = [&] {
      std::uint64_t failed = 0;
      for (const auto& report : twisted_structure_checks(max_dim)) failed += report.passed ? 0 : 1;
      return failed;
    };
    if (const auto baseline = failures(); baseline != 0) {
      r.fail("unmutated build already fails " + std::to_string(baseline) + " checks");
      return;
    }
    mutation::set_twisted_parity_flip(false);
    r.counts["failures_without_parity_flip"] = failures();
    mutation::set_twisted_parity_flip(true);
    mutation::set_ternary_xor(false);
    r.counts["failures_without_xor"] = failures();
    mutation::set_ternary_xor(true);
    if (r.counts["failures_without_parity_flip"] == 0) r.fail("dropping the orientation flip went unnoticed");
    if (r.counts["failures_without_xor"] == 0) r.fail("dropping the xor in ternary composition went unnoticed");
  });
}

Suite parse_suite(const std::string& text) {
  if (text == "all") return Suite::All;
  if (text == "standard") return Suite::Standard;
  if (text == "twisted") return Suite::Twisted;
  if (text == "laws") return Suite::Laws;
  if (text == "iso") return Suite::Iso;
  if (text == "mutation") return Suite::Mutation;
  throw ParseError("unknown suite '" + text + "' (expected all, standard, twisted, laws, iso or mutation)");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::All:
      return "all";
    case Suite::Standard:
      return "standard";
    case Suite::Twisted:
      return "twisted";
    case Suite::Laws:
      return "laws";
    case Suite::Iso:
      return "iso";
    case Suite::Mutation:
      return "mutation";
  }
  return "?";
}

std::vector<CheckReport> run_suite(Suite suite, int max_dim) {
  if (max_dim < 0) throw DimensionError("max-dim must be non-negative");
  const int g = std::min(max_dim, 3);
  std::vector<CheckReport> out;
  auto append = [&out](std::vector<CheckReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Standard) {
    append({check_rec_nonrec(max_dim), check_cube_shapes(max_dim), check_bchop_graphmeet(g, std::min(g, 2)),
            check_graphmeet_structured(g), check_graphmeet_graphdim(g), check_dimension_injective(g),
            check_base_extension(g), check_transpose(max_dim)});
  }
  if (all || suite == Suite::Twisted) {
    append({check_total_order(max_dim), check_outgoing_edges(max_dim), check_hamiltonian(max_dim),
            check_unique_surjection(g), check_face_injections(g), check_factorisation(g), check_twisted_lattice(g),
            check_fibre_sizes(g), check_semi_closure(g), check_tensor(2 * max_dim)});
  }
  if (all || suite == Suite::Laws) append(check_all_laws(g, std::min(g, 2)));
  if (suite == Suite::Iso) {
    append({check_bchop_graphmeet(g, std::min(g, 2)), check_graphmeet_graphdim(g)});
  }
  if (all || suite == Suite::Iso) append({check_ternary_graphdim(g, std::min(g, 2), g == 3 ? 10'000 : 0)});
  if (all || suite == Suite::Mutation) append({check_mutation_sensitivity(std::min(g, 2))});
  return out;
}

}  // namespace cubecat
