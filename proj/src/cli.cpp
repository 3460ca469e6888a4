#include <hexorient/cli.hpp>
#include <hexorient/errors.hpp>
#include <hexorient/generators.hpp>
#include <hexorient/manifold_oracle.hpp>
#include <hexorient/mesh_io.hpp>
#include <hexorient/orientation.hpp>
#include <hexorient/parallel_classes.hpp>
#include <hexorient/transforms.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace hexorient::cli
{
  namespace
  {
    std::string read_file(const std::string& path)
    {
      std::ifstream in(path, std::ios::binary);
      if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }

    void write_file(const std::string& path, const std::string& text)
    {
      std::ofstream out(path, std::ios::binary);
      if (!out || !(out << text))
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    }

    /// Writes to --out if given, else to standard output.
    void emit(const std::string& path, const std::string& text, std::ostream& out)
    {
      if (path.empty())
        out << text;
      else
        write_file(path, text);
    }

    Index integer_param(const std::vector<std::string>& params, std::size_t i,
                        const std::string& kind)
    {
      if (i >= params.size())
        throw Error(ErrorCode::InvalidArgument,
                    "generate " + kind + ": missing parameter " + std::to_string(i + 1));
      try
        {
          std::size_t used = 0;
          const long long value = std::stoll(params[i], &used);
          if (used != params[i].size())
            throw std::invalid_argument(params[i]);
          return static_cast<Index>(value);
        }
      catch (const std::logic_error&)
        {
          throw Error(ErrorCode::InvalidArgument,
                      "generate " + kind + ": '" + params[i] + "' is not an integer");
        }
    }

    MeshDocument generate(const std::string& kind,
                          const std::vector<std::string>& params)
    {
      auto p = [&](std::size_t i) { return integer_param(params, i, kind); };
      auto expect = [&](std::size_t n) {
        if (params.size() != n)
          throw Error(ErrorCode::InvalidArgument,
                      "generate " + kind + " takes " + std::to_string(n) +
                        " parameter(s)");
      };
      if (kind == "grid")
        return expect(2), to_document(grid(p(0), p(1)));
      if (kind == "grid3")
        return expect(3), to_document(grid3(p(0), p(1), p(2)));
      if (kind == "twisted_ring")
        return expect(2), to_document(twisted_ring(p(0), static_cast<int>(p(1))));
      if (kind == "moebius")
        return expect(1), to_document(moebius_strip(p(0), true));
      if (kind == "annulus")
        return expect(1), to_document(moebius_strip(p(0), false));
      if (kind == "cube_surface")
        return expect(0), to_document(cube_surface());
      if (kind == "cube_tets")
        {
          expect(1);
          MeshDocument doc;
          doc.dim = 3;
          doc.kind = SectionKind::Tets;
          doc.connectivity = cube_tets(static_cast<int>(p(0)));
          doc.coordinates = cube_corners();
          return doc;
        }
      throw Error(ErrorCode::InvalidArgument,
                  "unknown generator '" + kind +
                    "' (grid, grid3, twisted_ring, moebius, annulus, "
                    "cube_surface, cube_tets)");
    }

    MeshTopology load_mesh(const std::string& path)
    {
      return read_mesh(read_file(path));
    }

    MeshDocument load_document(const std::string& path, SectionKind kind)
    {
      MeshDocument doc = parse_mesh_document(read_file(path));
      if (doc.kind != kind)
        throw Error(ErrorCode::SchemaError,
                    "'" + path + "' has the wrong connectivity section");
      return doc;
    }

    void report_witnesses(const MeshTopology& mesh, const OrientationResult& result,
                          std::ostream& out)
    {
      out << "non-orientable: " << result.witnesses().size() << " failing classes\n";
      for (const auto& w : result.witnesses())
        {
          const auto [a, b] = mesh.edge(w.edge);
          out << "class " << w.class_id << " edge " << w.edge << " (" << a << "-"
              << b << ") cell " << w.cell << '\n';
        }
    }

    void report_mesh(const MeshTopology& mesh, std::ostream& out)
    {
      out << "dim " << mesh.dim() << ", " << mesh.num_vertices() << " vertices, "
          << mesh.num_edges() << " edges, " << mesh.num_cells() << " cells\n";
    }
  } // namespace

  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
  {
    CLI::App app{"Consistent edge orientation for quadrilateral and hexahedral meshes",
                 "hexorient"};
    app.require_subcommand(1);

    std::string in;
    std::string out_path;
    std::string orientation_path;

    std::string kind;
    std::vector<std::string> params;
    auto* generate_cmd = app.add_subcommand("generate", "write a built-in mesh");
    generate_cmd->add_option("kind", kind, "generator name")->required();
    generate_cmd->add_option("params", params, "integer parameters");
    generate_cmd->add_option("--out", out_path, "output mesh file");

    bool by_edge = false;
    auto* classes_cmd = app.add_subcommand("classes", "list parallel edge classes");
    classes_cmd->add_option("--in", in, "mesh file")->required();
    classes_cmd->add_flag("--by-edge", by_edge, "print the class of every edge");

    auto* orient_cmd = app.add_subcommand("orient", "orient all edges");
    orient_cmd->add_option("--in", in, "mesh file")->required();
    orient_cmd->add_option("--out", out_path, "output orientation file");

    auto* verify_cmd = app.add_subcommand("verify", "check an orientation");
    verify_cmd->add_option("--in", in, "mesh file")->required();
    verify_cmd->add_option("--orientation", orientation_path, "orientation file")
      ->required();

    auto* repair_cmd =
      app.add_subcommand("repair", "refine non-orientable sheets of a hex mesh");
    repair_cmd->add_option("--in", in, "mesh file")->required();
    repair_cmd->add_option("--out", out_path, "output mesh file");
    repair_cmd->add_option("--orientation", orientation_path,
                           "write the orientation of the repaired mesh here");

    std::vector<Index> class_ids;
    bool uniform = false;
    std::string out_orientation;
    auto* refine_cmd = app.add_subcommand("refine", "refine along sheets or uniformly");
    refine_cmd->add_option("--in", in, "mesh file")->required();
    refine_cmd->add_option("--out", out_path, "output mesh file");
    refine_cmd->add_option("--classes", class_ids, "class ids to refine along")
      ->delimiter(',');
    refine_cmd->add_flag("--uniform", uniform, "split every cell");
    refine_cmd->add_option("--orientation", orientation_path,
                           "orientation to inherit (with --uniform)");
    refine_cmd->add_option("--out-orientation", out_orientation,
                           "write the inherited orientation here");

    int layers = 1;
    double height = 1.0;
    auto* extrude_cmd = app.add_subcommand("extrude", "extrude a quad mesh into hexes");
    extrude_cmd->add_option("--in", in, "2d mesh file")->required();
    extrude_cmd->add_option("--out", out_path, "output mesh file");
    extrude_cmd->add_option("--layers", layers, "number of layers")
      ->check(CLI::PositiveNumber);
    extrude_cmd->add_option("--height", height, "layer height");

    auto* tet2hex_cmd = app.add_subcommand("tet2hex", "split tetrahedra into hexes");
    tet2hex_cmd->add_option("--in", in, "mesh file with a tets section")->required();
    tet2hex_cmd->add_option("--out", out_path, "output mesh file");

    auto* tri2quad_cmd = app.add_subcommand("tri2quad", "split triangles into quads");
    tri2quad_cmd->add_option("--in", in, "mesh file with a tris section")->required();
    tri2quad_cmd->add_option("--out", out_path, "output mesh file");

    std::string diagonal = "main";
    auto* oracle_cmd =
      app.add_subcommand("oracle", "decide surface orientability of a quad mesh");
    oracle_cmd->add_option("--in", in, "2d mesh file")->required();
    oracle_cmd->add_option("--diagonal", diagonal, "main or anti")
      ->check(CLI::IsMember({"main", "anti"}));

    auto* stats_cmd = app.add_subcommand("stats", "print mesh statistics");
    stats_cmd->add_option("--in", in, "mesh file")->required();

    try
      {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
      }
    catch (const CLI::ParseError& e)
      {
        const int code = app.exit(e, out, err);
        return code == 0 ? success : input_error;
      }

    try
      {
        if (generate_cmd->parsed())
          {
            emit(out_path, format_mesh_document(generate(kind, params)), out);
            return success;
          }

        if (classes_cmd->parsed())
          {
            const MeshTopology mesh = load_mesh(in);
            const ClassPartition classes = partition(mesh);
            if (by_edge)
              {
                for (Index e = 0; e < mesh.num_edges(); ++e)
                  out << mesh.edges()(e, 0) << ' ' << mesh.edges()(e, 1) << ' '
                      << classes.class_of_edge[static_cast<std::size_t>(e)] << '\n';
                return success;
              }
            for (const auto& c : classes.classes)
              {
                out << "class " << c.id << " size " << c.edges.size() << " boundary "
                    << (c.touches_boundary ? 1 : 0) << ':';
                for (const Index e : c.edges)
                  out << ' ' << mesh.edges()(e, 0) << '-' << mesh.edges()(e, 1);
                out << '\n';
              }
            return success;
          }

        if (orient_cmd->parsed())
          {
            const MeshTopology mesh = load_mesh(in);
            const OrientationResult result = orient(mesh, partition(mesh));
            if (!result.oriented())
              {
                report_witnesses(mesh, result, out);
                return inconsistent;
              }
            const std::string text = write_orientation(result.orientation(), mesh);
            if (out_path.empty())
              out << text;
            else
              {
                write_file(out_path, text);
                out << "oriented: " << mesh.num_edges() << " edges\n";
              }
            return success;
          }

        if (verify_cmd->parsed())
          {
            const MeshTopology mesh = load_mesh(in);
            const EdgeOrientation o = read_orientation(read_file(orientation_path), mesh);
            const auto violations = verify(mesh, o);
            for (const auto& v : violations)
              {
                out << "violation cell " << v.cell << " class " << v.local_class
                    << ':';
                for (const Index e : v.edges)
                  out << ' ' << edge_source(mesh, o, e) << "->"
                      << (edge_source(mesh, o, e) == mesh.edges()(e, 0) ?
                            mesh.edges()(e, 1) :
                            mesh.edges()(e, 0));
                out << '\n';
              }
            out << (violations.empty() ? "consistent\n" : "inconsistent\n");
            return violations.empty() ? success : inconsistent;
          }

        if (repair_cmd->parsed())
          {
            const MeshTopology mesh = load_mesh(in);
            const RepairResult result = repair(mesh);
            out << "refined " << result.refined_classes.size() << " classes\n";
            report_mesh(result.mesh, out);
            emit(out_path, write_mesh(result.mesh), out);
            if (!result.orientation.oriented())
              {
                report_witnesses(result.mesh, result.orientation, out);
                return inconsistent;
              }
            if (!orientation_path.empty())
              write_file(orientation_path,
                         write_orientation(result.orientation.orientation(),
                                           result.mesh));
            return success;
          }

        if (refine_cmd->parsed())
          {
            const MeshTopology mesh = load_mesh(in);
            RefinementResult result;
            if (uniform)
              {
                std::optional<EdgeOrientation> parent;
                if (!orientation_path.empty())
                  parent = read_orientation(read_file(orientation_path), mesh);
                result = uniform_refine(mesh, parent ? &*parent : nullptr);
              }
            else
              {
                if (class_ids.empty())
                  throw Error(ErrorCode::InvalidArgument,
                              "refine needs --classes or --uniform");
                result = refine_along_sheets(mesh, partition(mesh), class_ids);
              }
            emit(out_path, write_mesh(result.mesh), out);
            if (!out_orientation.empty())
              {
                if (!result.orientation)
                  throw Error(ErrorCode::InvalidArgument,
                              "--out-orientation needs --uniform and --orientation");
                write_file(out_orientation,
                           write_orientation(*result.orientation, result.mesh));
              }
            return success;
          }

        if (extrude_cmd->parsed())
          {
            const MeshTopology result = extrude(load_mesh(in), layers, height);
            emit(out_path, write_mesh(result), out);
            return success;
          }

        if (tet2hex_cmd->parsed())
          {
            const MeshDocument doc = load_document(in, SectionKind::Tets);
            const MeshTopology result =
              tet_to_hex(doc.connectivity, doc.coordinates.rows(), doc.coordinates);
            emit(out_path, write_mesh(result), out);
            return success;
          }

        if (tri2quad_cmd->parsed())
          {
            const MeshDocument doc = load_document(in, SectionKind::Tris);
            const MeshTopology result =
              tri_to_quad(doc.connectivity, doc.coordinates.rows(), doc.coordinates);
            emit(out_path, write_mesh(result), out);
            return success;
          }

        if (oracle_cmd->parsed())
          {
            const MeshTopology mesh = load_mesh(in);
            const bool orientable = surface_orientable(
              mesh, diagonal == "anti" ? Diagonal::Anti : Diagonal::Main);
            const bool edges = orient(mesh, partition(mesh)).oriented();
            out << "surface " << (orientable ? "orientable" : "non-orientable")
                << "\nedges " << (edges ? "orientable" : "non-orientable") << '\n';
            return orientable ? success : inconsistent;
          }

        if (stats_cmd->parsed())
          {
            const MeshTopology mesh = load_mesh(in);
            const ClassPartition classes = partition(mesh);
            const OrientationResult result = orient(mesh, classes);
            std::map<std::size_t, Index> histogram;
            for (const auto& c : classes.classes)
              ++histogram[c.edges.size()];
            out << "dim " << mesh.dim() << '\n'
                << "vertices " << mesh.num_vertices() << '\n'
                << "edges " << mesh.num_edges() << '\n'
                << "cells " << mesh.num_cells() << '\n'
                << "boundary_edges " << mesh.num_boundary_edges() << '\n'
                << "classes " << classes.num_classes() << '\n';
            for (const auto& [size, count] : histogram)
              out << "class_size " << size << ' ' << count << '\n';
            out << "partition_visits " << classes.cell_visits << '\n'
                << "orient_visits " << result.cell_visits() << '\n'
                << "orientable " << (result.oriented() ? "yes" : "no") << '\n'
                << "failing_classes " << result.witnesses().size() << '\n';
            return success;
          }
      }
    catch (const Error& e)
      {
        err << "error: " << e.what() << '\n';
        return input_error;
      }
    return input_error;
  }
} // namespace hexorient::cli
