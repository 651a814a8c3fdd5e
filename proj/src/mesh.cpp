// SPDX-License-Identifier: Apache-2.0
#include "gpd/mesh.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace gpd {

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line,
                             const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

bool next_token(std::istringstream& ss, std::string& tok) {
  return static_cast<bool>(ss >> tok);
}

}  // namespace

Vec3 TriangleMesh::triangle_normal(std::size_t t) const {
  const auto& tri = triangles[t];
  Vec3 e1 = vertices[tri[1]] - vertices[tri[0]];
  Vec3 e2 = vertices[tri[2]] - vertices[tri[0]];
  Vec3 n = e1.cross(e2);
  double len = n.norm();
  return len > 0 ? Vec3(n / len) : Vec3(0, 0, 0);
}

double TriangleMesh::triangle_area(std::size_t t) const {
  const auto& tri = triangles[t];
  Vec3 e1 = vertices[tri[1]] - vertices[tri[0]];
  Vec3 e2 = vertices[tri[2]] - vertices[tri[0]];
  return 0.5 * e1.cross(e2).norm();
}

double TriangleMesh::total_area() const {
  double a = 0;
  for (std::size_t t = 0; t < triangles.size(); ++t) a += triangle_area(t);
  return a;
}

Aabb TriangleMesh::bounds() const {
  Aabb b;
  if (vertices.empty()) return b;
  b.lo = b.hi = vertices[0];
  for (const auto& v : vertices) {
    b.lo = b.lo.cwiseMin(v);
    b.hi = b.hi.cwiseMax(v);
  }
  return b;
}

void TriangleMesh::validate() const {
  int n = static_cast<int>(vertices.size());
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      int idx = triangles[t][k];
      if (idx < 0 || idx >= n)
        throw std::runtime_error("triangle " + std::to_string(t) +
                                 " references vertex " + std::to_string(idx) +
                                 " of " + std::to_string(n));
    }
    if (triangle_area(t) <= 1e-12)
      throw std::runtime_error("triangle " + std::to_string(t) +
                               " is degenerate (area <= 1e-12 m^2)");
  }
}

void TriangleMesh::transform(const RigidTransform& tf) {
  for (auto& v : vertices) v = tf.apply(v);
}

namespace {

TriangleMesh load_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  TriangleMesh mesh;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ss >> x >> y >> z)) parse_fail(path, lineno, "bad vertex record");
      mesh.vertices.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<long> ids;
      std::string tok;
      while (next_token(ss, tok)) {
        // accept v, v/vt, v/vt/vn forms; only the vertex index is used
        long v = 0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || v == 0)
          parse_fail(path, lineno, "bad face index '" + tok + "'");
        ids.push_back(v);
      }
      if (ids.size() != 3)
        parse_fail(path, lineno, "non-triangle face with " +
                                     std::to_string(ids.size()) + " vertices");
      std::array<int, 3> tri;
      for (int k = 0; k < 3; ++k) {
        long v = ids[k];
        long n = static_cast<long>(mesh.vertices.size());
        if (v < 0) v = n + 1 + v;  // OBJ relative indexing
        if (v < 1 || v > n)
          parse_fail(path, lineno, "face references vertex " +
                                       std::to_string(ids[k]) + " of " +
                                       std::to_string(n));
        tri[k] = static_cast<int>(v - 1);
      }
      mesh.triangles.push_back(tri);
    }
    // other records (vn, vt, o, g, usemtl, ...) are ignored
  }
  mesh.validate();
  return mesh;
}

TriangleMesh load_ply(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  int lineno = 0;

  auto get_line = [&]() -> std::string& {
    if (!std::getline(in, line)) parse_fail(path, lineno, "unexpected EOF");
    ++lineno;
    return line;
  };

  if (get_line().rfind("ply", 0) != 0) parse_fail(path, lineno, "missing ply magic");

  long n_vertices = -1, n_faces = -1;
  int xi = -1, yi = -1, zi = -1;
  int vertex_props = 0;
  std::string element;
  bool ascii = false;
  while (true) {
    std::istringstream ss(get_line());
    std::string tag;
    ss >> tag;
    if (tag == "comment") continue;
    if (tag == "format") {
      std::string fmt;
      ss >> fmt;
      ascii = (fmt == "ascii");
      if (!ascii) parse_fail(path, lineno, "only ASCII PLY supported");
    } else if (tag == "element") {
      std::string name;
      long count;
      if (!(ss >> name >> count)) parse_fail(path, lineno, "bad element");
      element = name;
      if (name == "vertex") n_vertices = count;
      else if (name == "face") n_faces = count;
    } else if (tag == "property") {
      if (element == "vertex") {
        std::string type, name;
        ss >> type;
        if (type == "list") parse_fail(path, lineno, "list property on vertex");
        ss >> name;
        if (name == "x") xi = vertex_props;
        if (name == "y") yi = vertex_props;
        if (name == "z") zi = vertex_props;
        ++vertex_props;
      }
    } else if (tag == "end_header") {
      break;
    }
  }
  if (n_vertices < 0 || n_faces < 0)
    parse_fail(path, lineno, "header missing vertex or face element");
  if (xi < 0 || yi < 0 || zi < 0)
    parse_fail(path, lineno, "vertex element lacks x/y/z properties");

  TriangleMesh mesh;
  mesh.vertices.reserve(n_vertices);
  for (long i = 0; i < n_vertices; ++i) {
    std::istringstream ss(get_line());
    std::vector<double> vals(vertex_props);
    for (int k = 0; k < vertex_props; ++k)
      if (!(ss >> vals[k])) parse_fail(path, lineno, "short vertex record");
    mesh.vertices.emplace_back(vals[xi], vals[yi], vals[zi]);
  }
  for (long i = 0; i < n_faces; ++i) {
    std::istringstream ss(get_line());
    long count;
    if (!(ss >> count)) parse_fail(path, lineno, "bad face record");
    if (count != 3)
      parse_fail(path, lineno,
                 "non-triangle face with " + std::to_string(count) + " vertices");
    std::array<int, 3> tri;
    for (int k = 0; k < 3; ++k) {
      long v;
      if (!(ss >> v)) parse_fail(path, lineno, "short face record");
      if (v < 0 || v >= n_vertices)
        parse_fail(path, lineno, "face references vertex " + std::to_string(v) +
                                     " of " + std::to_string(n_vertices));
      tri[k] = static_cast<int>(v);
    }
    mesh.triangles.push_back(tri);
  }
  mesh.validate();
  return mesh;
}

std::string lower_ext(const std::string& path) {
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return "";
  std::string ext = path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

}  // namespace

TriangleMesh load_mesh(const std::string& path) {
  std::string ext = lower_ext(path);
  if (ext == "obj") return load_obj(path);
  if (ext == "ply") return load_ply(path);
  throw std::runtime_error("unsupported mesh extension: " + path);
}

void save_mesh_obj(const TriangleMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(9);
  for (const auto& v : mesh.vertices)
    out << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  for (const auto& t : mesh.triangles)
    out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

void save_mesh_ply(const TriangleMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(9);
  out << "ply\nformat ascii 1.0\n";
  out << "element vertex " << mesh.vertices.size() << '\n';
  out << "property float x\nproperty float y\nproperty float z\n";
  out << "element face " << mesh.triangles.size() << '\n';
  out << "property list uchar int vertex_indices\nend_header\n";
  for (const auto& v : mesh.vertices)
    out << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  for (const auto& t : mesh.triangles)
    out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

TriangleMesh merge_meshes(const std::vector<TriangleMesh>& parts,
                          std::vector<int>* triangle_owner) {
  TriangleMesh merged;
  if (triangle_owner) triangle_owner->clear();
  for (std::size_t m = 0; m < parts.size(); ++m) {
    int base = static_cast<int>(merged.vertices.size());
    merged.vertices.insert(merged.vertices.end(), parts[m].vertices.begin(),
                           parts[m].vertices.end());
    for (const auto& t : parts[m].triangles) {
      merged.triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
      if (triangle_owner) triangle_owner->push_back(static_cast<int>(m));
    }
  }
  return merged;
}

}  // namespace gpd
