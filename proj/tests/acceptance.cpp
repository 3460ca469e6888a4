// Acceptance gate: runs every acceptance criterion and prints one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.

#include "support.hpp"

#include <hexorient/errors.hpp>
#include <hexorient/generators.hpp>
#include <hexorient/manifold_oracle.hpp>
#include <hexorient/mesh_io.hpp>
#include <hexorient/orientation.hpp>
#include <hexorient/parallel_classes.hpp>
#include <hexorient/transforms.hpp>

#include <Eigen/Dense>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace hexorient;
using namespace hexorient::testing;

namespace
{
  struct Outcome
  {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void expect(bool condition, const std::string& what)
    {
      if (!condition)
        {
          pass = false;
          if (failures.size() < 5)
            failures.push_back(what);
        }
    }
  };

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point start)
  {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  std::string slurp(const std::filesystem::path& path)
  {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string name(const std::string& base, std::initializer_list<Index> params)
  {
    std::string out = base + "(";
    bool first = true;
    for (const Index p : params)
      {
        out += (first ? "" : ",") + std::to_string(p);
        first = false;
      }
    return out + ")";
  }

  struct Sample
  {
    std::string label;
    MeshTopology mesh;
  };

  /// Small meshes with at most 14 edges: every generator output that fits,
  /// rotated copies of them, and random glued quads.
  std::vector<Sample> small_corpus()
  {
    std::vector<Sample> out;
    for (Index n = 1; n <= 4; ++n)
      for (Index m = 1; m <= 4; ++m)
        if (const auto g = grid(n, m); g.num_edges() <= 14)
          out.push_back({name("grid", {n, m}), g});
    for (Index n = 3; n <= 4; ++n)
      {
        out.push_back({name("moebius_strip", {n}), moebius_strip(n)});
        out.push_back({name("annulus", {n}), moebius_strip(n, false)});
      }
    out.push_back({"grid3(1,1,1)", grid3(1, 1, 1)});
    out.push_back({"cube_surface", cube_surface()});
    CellMatrix tri(1, 3);
    tri << 0, 1, 2;
    out.push_back({"tri_to_quad(single)", tri_to_quad(tri, 3)});

    std::mt19937 rng(1);
    const std::size_t generated = out.size();
    for (std::size_t i = 0; i < generated; ++i)
      for (int copy = 0; copy < 2; ++copy)
        out.push_back({out[i].label + " rotated", rotate_tuples(out[i].mesh, rng)});

    int glued = 0;
    while (glued < 40)
      if (auto mesh = random_glued_quads(rng, 6, 1 + glued % 4, 14))
        {
          out.push_back({"glued quads #" + std::to_string(glued), std::move(*mesh)});
          ++glued;
        }
    return out;
  }

  Outcome ac1_planar_totality()
  {
    Outcome o;
    const auto start = Clock::now();
    std::mt19937 rng(101);
    std::size_t cells = 0;
    auto check = [&](const MeshTopology& mesh, const std::string& label) {
      const auto result = orient(mesh, partition(mesh));
      o.expect(result.oriented(), label + " not oriented");
      if (result.oriented())
        o.expect(verify(mesh, result.orientation()).empty(), label + " has violations");
      cells += static_cast<std::size_t>(mesh.num_cells());
    };

    for (int i = 0; i < 500; ++i)
      check(random_planar_mesh(rng, 64), "planar mesh #" + std::to_string(i));

    int triangulations = 0;
    for (int i = 0; i < 100; ++i, ++triangulations)
      {
        const auto quads = random_planar_mesh(rng, 24);
        check(tri_to_quad(random_triangulation(rng, quads), quads.num_vertices()),
              "tri_to_quad #" + std::to_string(i));
      }
    for (Index k = 3; k <= 12; ++k, ++triangulations)
      {
        CellMatrix fan(k, 3);
        for (Index i = 0; i < k; ++i)
          fan.row(i) << 0, 1 + i, 1 + (i + 1) % k;
        check(tri_to_quad(fan, k + 1), name("fan", {k}));
      }
    CellMatrix one(1, 3), two(2, 3);
    one << 0, 1, 2;
    two << 0, 1, 2, 1, 3, 2;
    check(tri_to_quad(one, 3), "single triangle");
    check(tri_to_quad(two, 4), "triangle pair");
    triangulations += 2;

    const double elapsed = seconds_since(start);
    o.expect(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
    std::ostringstream d;
    d << "500 planar meshes + " << triangulations << " tri_to_quad outputs, " << cells
      << " cells, " << std::fixed << std::setprecision(2) << elapsed << " s";
    o.detail = d.str();
    return o;
  }

  Outcome ac2_oracle_equivalence()
  {
    Outcome o;
    const auto corpus = small_corpus();
    int orientable_count = 0;
    for (const auto& [label, mesh] : corpus)
      {
        o.expect(mesh.num_edges() <= 14, label + " too large");
        const auto expected = exhaustive_orient(mesh);
        const auto result = orient(mesh, partition(mesh));
        o.expect(result.oriented() == expected.has_value(), label + " verdicts differ");
        if (result.oriented())
          o.expect(verify(mesh, result.orientation()).empty(), label + " has violations");
        orientable_count += expected ? 1 : 0;
      }
    o.expect(corpus.size() >= 50, "corpus too small");
    o.detail = std::to_string(corpus.size()) + " meshes, " +
               std::to_string(orientable_count) + " orientable, " +
               std::to_string(corpus.size() - static_cast<std::size_t>(orientable_count)) +
               " not";
    return o;
  }

  Outcome ac3_counterexamples()
  {
    Outcome o;
    for (Index n = 3; n <= 16; ++n)
      {
        o.expect(failing_classes(twisted_ring(n, 0)) == 0, name("twisted_ring", {n, 0}));
        o.expect(failing_classes(twisted_ring(n, 1)) == 1, name("twisted_ring", {n, 1}));
        o.expect(failing_classes(twisted_ring(n, 2)) == 2, name("twisted_ring", {n, 2}));
      }
    o.detail = "n = 3..16; q=0 oriented, q=1 one failing class, q=2 two failing classes";
    return o;
  }

  Outcome ac4_repair()
  {
    Outcome o;
    int merged = 0;
    for (const int q : {1, 2})
      for (Index n = 3; n <= 12; ++n)
        {
          const auto label = name("twisted_ring", {n, q});
          const auto ring = twisted_ring(n, q);
          const auto coarse = partition(ring);
          const auto r = repair(ring);
          o.expect(r.orientation.oriented(), label + " not oriented after repair");
          o.expect(!r.refined_classes.empty(), label + " was not refined");

          const auto fine = partition(r.mesh);
          for (const Index c : r.refined_classes)
            {
              std::set<Index> classes;
              for (const Index e : coarse.classes[static_cast<std::size_t>(c)].edges)
                for (const auto& [a, b] : r.map.child_edges[static_cast<std::size_t>(e)])
                  classes.insert(
                    fine.class_of_edge[static_cast<std::size_t>(*r.mesh.find_edge(a, b))]);
              o.expect(classes.size() == 1, label + " children of class " +
                                              std::to_string(c) + " split");
              merged += classes.size() == 1 ? 1 : 0;
            }
        }
    o.detail = "20 rings repaired in one pass; " + std::to_string(merged) +
               " refined classes each became one class";
    return o;
  }

  Outcome ac5_orientable_families()
  {
    Outcome o;
    std::mt19937 rng(505);
    int extrusions = 0;
    for (int i = 0; i < 100; ++i)
      {
        const auto base = random_planar_mesh(rng, 16);
        for (int layers = 1; layers <= 4; ++layers, ++extrusions)
          o.expect(orientable(extrude(base, layers)),
                   "extrusion #" + std::to_string(i) + " x" + std::to_string(layers));
      }

    CellMatrix one(1, 4), two(2, 4);
    one << 0, 1, 2, 3;
    two << 0, 1, 2, 3, 1, 2, 3, 4;
    o.expect(orientable(tet_to_hex(one, 4)), "single tet");
    o.expect(orientable(tet_to_hex(two, 5)), "tet pair");
    o.expect(orientable(tet_to_hex(cube_tets(5), 8)), "5-tet cube");
    o.expect(orientable(tet_to_hex(cube_tets(6), 8)), "6-tet cube");

    o.expect(orientable(uniform_refine(twisted_ring(8, 2)).mesh), "refined ring");
    o.detail = std::to_string(extrusions) +
               " extrusions, 4 tet meshes, uniform refinement of twisted_ring(8,2)";
    return o;
  }

  Outcome ac6_surface_oracle()
  {
    Outcome o;
    std::vector<Sample> surfaces;
    for (Index n = 1; n <= 6; ++n)
      surfaces.push_back({name("grid", {n, n + 1}), grid(n, n + 1)});
    for (Index n = 3; n <= 10; ++n)
      {
        surfaces.push_back({name("annulus", {n}), moebius_strip(n, false)});
        surfaces.push_back({name("moebius_strip", {n}), moebius_strip(n)});
      }
    surfaces.push_back({"cube_surface", cube_surface()});

    for (const auto& [label, mesh] : surfaces)
      {
        const bool main = surface_orientable(mesh, Diagonal::Main);
        const bool anti = surface_orientable(mesh, Diagonal::Anti);
        o.expect(main == anti, label + " depends on the diagonal");
        o.expect(main == orientable(mesh), label + " oracle disagrees with orient");
      }
    o.detail = std::to_string(surfaces.size()) + " surfaces, both diagonals";
    return o;
  }

  Outcome ac7_partition_laws()
  {
    Outcome o;
    auto corpus = small_corpus();
    std::mt19937 rng(707);
    for (int i = 0; i < 30; ++i)
      corpus.push_back({"planar #" + std::to_string(i), random_planar_mesh(rng, 20)});
    for (Index n = 3; n <= 8; ++n)
      for (const int q : {0, 1, 2, 3})
        corpus.push_back({name("twisted_ring", {n, q}), twisted_ring(n, q)});
    corpus.push_back({"grid3(3,2,2) rotated", rotate_tuples(grid3(3, 2, 2), rng)});

    for (const auto& [label, mesh] : corpus)
      {
        const auto p = partition(mesh);
        o.expect(partition_is_valid(mesh, p), label + " partition invalid");
        for (const auto& c : p.classes)
          {
            std::uniform_int_distribution<std::size_t> pick(0, c.edges.size() - 1);
            for (int s = 0; s < 10; ++s)
              o.expect(parallel_set(mesh, c.edges[pick(rng)]).edges == c.edges,
                       label + " seed dependence");
          }
      }

    for (Index n = 1; n <= 12; ++n)
      for (Index m = 1; m <= 12; ++m)
        {
          const auto g = grid(n, m);
          const auto classes = partition(g).num_classes();
          o.expect(classes == n + m, name("grid", {n, m}) + " class count");
          o.expect(2 * classes == g.num_boundary_edges(), name("grid", {n, m}) + " bound");
        }
    o.detail = std::to_string(corpus.size()) + " meshes, 144 grids";
    return o;
  }

  Outcome ac8_linear_complexity()
  {
    Outcome o;
    const std::array<Index, 4> sizes{8, 16, 32, 64};
    Eigen::Vector4d edges, visits;
    double timed = 0.0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
      {
        const Index k = sizes[i];
        const auto start = Clock::now();
        const auto mesh = grid3(k, k, k);
        const auto p = partition(mesh);
        const auto result = orient(mesh, p);
        const double elapsed = seconds_since(start);
        o.expect(result.oriented(), name("grid3", {k, k, k}) + " not oriented");
        edges(static_cast<Index>(i)) = static_cast<double>(mesh.num_edges());
        visits(static_cast<Index>(i)) = static_cast<double>(p.cell_visits + result.cell_visits());
        if (k == 64)
          timed = elapsed;
      }

    // least squares fit visits = a * N_e + b on relative residuals
    Eigen::Matrix<double, 4, 2> design;
    design.col(0) = edges.cwiseQuotient(visits);
    design.col(1) = visits.cwiseInverse();
    const Eigen::Vector2d ab =
      design.colPivHouseholderQr().solve(Eigen::Vector4d::Ones());
    const Eigen::Vector4d fitted = ab(0) * edges + Eigen::Vector4d::Constant(ab(1));
    const double deviation =
      ((fitted - visits).cwiseAbs().cwiseQuotient(visits)).maxCoeff();

    o.expect(deviation <= 0.10, "max relative deviation " + std::to_string(deviation));
    o.expect(timed < 5.0, "k=64 took " + std::to_string(timed) + " s");
    std::ostringstream d;
    d << "visits = " << std::setprecision(4) << ab(0) << " N_e " << (ab(1) < 0 ? "- " : "+ ")
      << std::setprecision(6) << std::abs(ab(1)) << ", max deviation " << std::fixed << std::setprecision(1)
      << 100 * deviation << "%, k=64 (" << static_cast<Index>(edges(3)) << " edges) in "
      << std::setprecision(2) << timed << " s";
    o.detail = d.str();
    return o;
  }

  Outcome ac9_flip_class()
  {
    Outcome o;
    std::mt19937 rng(909);
    int samples = 0;
    while (samples < 100)
      {
        MeshTopology mesh;
        switch (samples % 4)
          {
            case 0:
            case 1:
              mesh = random_planar_mesh(rng, 12);
              break;
            case 2:
              mesh = rotate_tuples(grid3(1 + samples % 3, 2, 1 + samples % 2), rng);
              break;
            default:
              mesh = twisted_ring(3 + samples % 6, 0);
          }
        const auto p = partition(mesh);
        const auto base = orient(mesh, p).orientation();
        std::uniform_int_distribution<Index> pick(0, p.num_classes() - 1);
        const Index c = pick(rng);
        const auto label = "sample " + std::to_string(samples);

        o.expect(verify(mesh, flip_class(base, p, c)).empty(), label + " whole flip");

        // a member that shares a cell with another member
        const auto& members = p.classes[static_cast<std::size_t>(c)].edges;
        std::uniform_int_distribution<std::size_t> member(0, members.size() - 1);
        auto single = base;
        const Index e = members[member(rng)];
        single.forward[e] = !single.forward[e];
        o.expect(!verify(mesh, single).empty(), label + " single flip undetected");
        ++samples;
      }
    o.detail = "100 (mesh, class) samples";
    return o;
  }

  Outcome ac10_io_round_trip()
  {
    Outcome o;
    const std::filesystem::path fixtures = HEXORIENT_FIXTURE_DIR;
    int files = 0, orientations = 0;
    std::vector<std::string> texts;
    for (const auto& entry : std::filesystem::directory_iterator(fixtures))
      {
        if (entry.path().extension() != ".msh")
          continue;
        ++files;
        const auto label = entry.path().filename().string();
        const std::string text = slurp(entry.path());
        texts.push_back(text);
        const auto doc = parse_mesh_document(text);
        const std::string canonical = format_mesh_document(doc);
        o.expect(format_mesh_document(parse_mesh_document(canonical)) == canonical,
                 label + " round trip");
        if (label.rfind("canonical_", 0) == 0)
          o.expect(canonical == text, label + " not reproduced byte for byte");
        if (doc.kind != SectionKind::Cells)
          continue;
        const auto mesh = read_mesh(text);
        const auto result = orient(mesh, partition(mesh));
        if (!result.oriented())
          continue;
        const auto again = read_orientation(write_orientation(result.orientation(), mesh), mesh);
        o.expect(again == result.orientation() && verify(mesh, again).empty(),
                 label + " orientation round trip");
        ++orientations;
      }

    std::mt19937 rng(1010);
    std::uniform_int_distribution<int> byte(0, 255);
    int rejected = 0;
    const int fuzz = 5000;
    for (int trial = 0; trial < fuzz; ++trial)
      {
        std::string text = texts[static_cast<std::size_t>(trial) % texts.size()];
        std::uniform_int_distribution<std::size_t> where(0, text.size() - 1);
        for (int i = 0; i <= trial % 8; ++i)
          text[where(rng)] = static_cast<char>(trial % 2 ? byte(rng) : "0123456789 \n-#x"[i % 16]);
        try
          {
            read_mesh(text);
          }
        catch (const Error&)
          {
            ++rejected;
          }
        catch (const std::exception& e)
          {
            o.expect(false, std::string("fuzz input raised ") + e.what());
          }
      }
    o.detail = std::to_string(files) + " fixtures, " + std::to_string(orientations) +
               " orientation files, " + std::to_string(fuzz) + " fuzzed inputs (" +
               std::to_string(rejected) + " rejected cleanly)";
    return o;
  }
} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
    {"AC1 2d totality", ac1_planar_totality},
    {"AC2 oracle equivalence", ac2_oracle_equivalence},
    {"AC3 counterexamples", ac3_counterexamples},
    {"AC4 repair", ac4_repair},
    {"AC5 always-orientable families", ac5_orientable_families},
    {"AC6 surface oracle agreement", ac6_surface_oracle},
    {"AC7 partition laws", ac7_partition_laws},
    {"AC8 linear complexity", ac8_linear_complexity},
    {"AC9 flip-class property", ac9_flip_class},
    {"AC10 I/O round trip", ac10_io_round_trip},
  };

  int failed = 0;
  for (const auto& [label, run] : criteria)
    {
      Outcome outcome;
      try
        {
          outcome = run();
        }
      catch (const std::exception& e)
        {
          outcome.pass = false;
          outcome.failures.push_back(std::string("exception: ") + e.what());
        }
      std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << label;
      if (!outcome.detail.empty())
        std::cout << ": " << outcome.detail;
      std::cout << '\n';
      for (const auto& f : outcome.failures)
        std::cout << "       " << f << '\n';
      failed += outcome.pass ? 0 : 1;
    }
  std::cout << (failed == 0 ? "all acceptance criteria passed\n" :
                              std::to_string(failed) + " criteria failed\n");
  return failed == 0 ? 0 : 1;
}
