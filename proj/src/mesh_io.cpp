#include "mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace wct {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line; throws Parse at EOF.
  std::istringstream next(const char* what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos)
        return std::istringstream(line);
    }
    throw Error(ErrorCode::Parse,
                "line " + std::to_string(line_number_ + 1) +
                    ": unexpected end of file while reading " + what);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_number_) + ": " + msg);
  }

  int line_number() const { return line_number_; }

private:
  std::istream& in_;
  int line_number_ = 0;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  return out;
}

}  // namespace

TetMesh read_mesh(std::istream& in) {
  LineReader lines(in);
  auto header = lines.next("mesh header");
  int dim = -1;
  long nv = -1, nc = -1;
  if (!(header >> dim >> nv >> nc)) lines.fail("expected 'dim nv nc'");
  if (dim != 3) lines.fail("unsupported mesh dimension " + std::to_string(dim));
  if (nv < 0 || nc < 0 || nv > 100'000'000 || nc > 100'000'000)
    lines.fail("unreasonable count");

  std::vector<Vec3> vertices;
  vertices.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    auto row = lines.next("vertex coordinates");
    Vec3 p;
    if (!(row >> p(0) >> p(1) >> p(2))) lines.fail("expected 3 coordinates");
    vertices.push_back(p);
  }
  std::vector<std::array<int, 4>> tets;
  tets.reserve(nc);
  for (long i = 0; i < nc; ++i) {
    auto row = lines.next("cell indices");
    std::array<int, 4> t{};
    if (!(row >> t[0] >> t[1] >> t[2] >> t[3])) lines.fail("expected 4 indices");
    tets.push_back(t);
  }
  try {
    return make_tet_mesh(std::move(vertices), std::move(tets));
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

void write_mesh(std::ostream& out, const TetMesh& mesh) {
  out << "3 " << mesh.vertices.size() << ' ' << mesh.tets.size() << '\n';
  for (const auto& v : mesh.vertices)
    out << format_double(v(0)) << ' ' << format_double(v(1)) << ' '
        << format_double(v(2)) << '\n';
  for (const auto& t : mesh.tets)
    out << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << '\n';
}

SphereTriangulation read_link(std::istream& in) {
  LineReader lines(in);
  auto header = lines.next("link header");
  std::string first;
  header >> first;
  SphereTriangulation tri;
  if (first == "OFF") {
    auto counts = lines.next("OFF counts");
    long nv = -1, nf = -1, ne = 0;
    if (!(counts >> nv >> nf >> ne)) lines.fail("expected 'nv nf ne'");
    for (long i = 0; i < nv; ++i) lines.next("OFF vertex");  // coordinates unused
    tri.num_vertices = static_cast<int>(nv);
    for (long i = 0; i < nf; ++i) {
      auto row = lines.next("OFF face");
      int arity = 0;
      std::array<int, 3> t{};
      if (!(row >> arity >> t[0] >> t[1] >> t[2]) || arity != 3)
        lines.fail("expected triangle face");
      tri.triangles.push_back(t);
    }
  } else {
    long m = -1, t = -1;
    std::istringstream reparse(header.str());
    if (!(reparse >> m >> t)) lines.fail("expected 'm t'");
    tri.num_vertices = static_cast<int>(m);
    for (long i = 0; i < t; ++i) {
      auto row = lines.next("link triangle");
      std::array<int, 3> tr{};
      if (!(row >> tr[0] >> tr[1] >> tr[2])) lines.fail("expected 3 indices");
      tri.triangles.push_back(tr);
    }
  }
  const auto diag = validate_sphere(tri);
  if (!diag.valid)
    throw Error(ErrorCode::Parse, "invalid link triangulation: " + diag.first_failure);
  return tri;
}

void write_link(std::ostream& out, const SphereTriangulation& tri) {
  out << tri.num_vertices << ' ' << tri.triangles.size() << '\n';
  for (const auto& t : tri.triangles)
    out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void write_region(std::ostream& out, const RegionGrid& grid) {
  out << "wct-region 1\n";
  out << "bbox";
  for (double b : grid.bbox) out << ' ' << format_double(b);
  out << "\nres " << grid.resolution[0] << ' ' << grid.resolution[1] << ' '
      << grid.resolution[2] << '\n';
  out << "facet";
  for (const auto& v : grid.facet.vertices)
    for (int a = 0; a < 3; ++a) out << ' ' << format_double(v(a));
  out << '\n';
  size_t at = 0;
  for (int iz = 0; iz < grid.resolution[2]; ++iz)
    for (int iy = 0; iy < grid.resolution[1]; ++iy) {
      for (int ix = 0; ix < grid.resolution[0]; ++ix, ++at) {
        if (ix) out << ' ';
        out << format_double(grid.values[at]);
      }
      out << '\n';
    }
}

RegionGrid read_region(std::istream& in) {
  LineReader lines(in);
  auto magic = lines.next("region header");
  std::string tag;
  int version = 0;
  if (!(magic >> tag >> version) || tag != "wct-region" || version != 1)
    lines.fail("expected 'wct-region 1'");
  RegionGrid grid;
  auto bbox = lines.next("bbox");
  if (!(bbox >> tag) || tag != "bbox") lines.fail("expected bbox");
  for (double& b : grid.bbox)
    if (!(bbox >> b)) lines.fail("expected 6 bbox values");
  auto res = lines.next("res");
  if (!(res >> tag) || tag != "res") lines.fail("expected res");
  for (int& r : grid.resolution)
    if (!(res >> r)) lines.fail("expected 3 resolution values");
  auto facet = lines.next("facet");
  if (!(facet >> tag) || tag != "facet") lines.fail("expected facet");
  std::vector<Vector> vs(3, Vector(3));
  for (auto& v : vs)
    for (int a = 0; a < 3; ++a)
      if (!(facet >> v(a))) lines.fail("expected 9 facet coordinates");
  grid.facet = make_simplex(vs);
  const size_t total = static_cast<size_t>(grid.resolution[0]) *
                       grid.resolution[1] * grid.resolution[2];
  grid.values.reserve(total);
  for (int iz = 0; iz < grid.resolution[2]; ++iz)
    for (int iy = 0; iy < grid.resolution[1]; ++iy) {
      auto row = lines.next("grid row");
      for (int ix = 0; ix < grid.resolution[0]; ++ix) {
        double v;
        if (!(row >> v)) lines.fail("short grid row");
        grid.values.push_back(v);
      }
    }
  return grid;
}

TetMesh read_mesh_file(const std::string& path) {
  auto in = open_in(path);
  return read_mesh(in);
}

void write_mesh_file(const std::string& path, const TetMesh& mesh) {
  auto out = open_out(path);
  write_mesh(out, mesh);
}

SphereTriangulation read_link_file(const std::string& path) {
  auto in = open_in(path);
  return read_link(in);
}

void write_link_file(const std::string& path, const SphereTriangulation& tri) {
  auto out = open_out(path);
  write_link(out, tri);
}

void write_region_file(const std::string& path, const RegionGrid& grid) {
  auto out = open_out(path);
  write_region(out, grid);
}

}  // namespace wct
