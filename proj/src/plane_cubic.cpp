#include "frustra/plane_cubic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace frustra {

namespace {

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

// Breadth-first relabelling from root; code lists (twin, sigma) per label.
std::vector<int> bfs_code(const std::vector<int>& twin, const std::vector<int>& sigma, int root) {
  const int n = static_cast<int>(twin.size());
  std::vector<int> label(n, -1);
  std::vector<int> order;
  order.reserve(n);
  label[root] = 0;
  order.push_back(root);
  std::vector<int> code;
  code.reserve(2 * n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int d = order[i];
    for (int x : {twin[d], sigma[d]}) {
      if (label[x] < 0) {
        label[x] = static_cast<int>(order.size());
        order.push_back(x);
      }
      code.push_back(label[x]);
    }
  }
  return code;
}

struct Converted {
  PlaneEmbedding pe;
  std::vector<Dart> dart_of;
};

Converted convert(const DartMap& m) {
  const int n = m.darts();
  std::vector<int> vertex(n, -1);
  int nv = 0;
  for (int d = 0; d < n; ++d) {
    if (vertex[d] >= 0) continue;
    for (int x = d; vertex[x] < 0; x = m.sigma[x]) vertex[x] = nv;
    ++nv;
  }
  Converted c;
  c.pe.graph = SignedMultigraph::with_vertices(nv);
  c.dart_of.resize(n);
  for (int d = 0; d < n; ++d) {
    if (d > m.twin[d]) continue;
    const EdgeId e = c.pe.graph.add_edge(vertex[d], vertex[m.twin[d]], Sign::Positive);
    c.dart_of[d] = Dart{e, 0};
    c.dart_of[m.twin[d]] = Dart{e, 1};
  }
  std::vector<bool> seen(n, false);
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    auto& ring = c.pe.rotation[vertex[d]];
    for (int x = d; !seen[x]; x = m.sigma[x]) {
      seen[x] = true;
      ring.push_back(c.dart_of[x]);
    }
  }
  return c;
}

bool planar_connected(const DartMap& m) {
  const int n = m.darts();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int d = 0; d < n; ++d) {
    parent[find(d)] = find(m.twin[d]);
    parent[find(d)] = find(m.sigma[d]);
  }
  for (int d = 0; d < n; ++d)
    if (find(d) != find(0)) return false;
  const int faces = static_cast<int>(map_faces(m).size());
  return m.vertex_count() - n / 2 + faces == 2;
}

}  // namespace

int DartMap::vertex_count() const {
  std::vector<bool> seen(sigma.size(), false);
  int count = 0;
  for (int d = 0; d < darts(); ++d) {
    if (seen[d]) continue;
    ++count;
    for (int x = d; !seen[x]; x = sigma[x]) seen[x] = true;
  }
  return count;
}

DartMap theta_map() {
  // Edges i = darts (2i, 2i+1); vertex A holds the even darts, B the odd ones.
  DartMap m;
  m.twin = {1, 0, 3, 2, 5, 4};
  m.sigma.assign(6, 0);
  m.sigma[0] = 2;
  m.sigma[2] = 4;
  m.sigma[4] = 0;
  m.sigma[1] = 5;
  m.sigma[5] = 3;
  m.sigma[3] = 1;
  return m;
}

DartMap insert_edge(const DartMap& m, int a, int b) {
  if (a < 0 || b < 0 || a >= m.darts() || b >= m.darts()) throw GraphError("dart out of range");
  if (b == m.twin[a]) throw GraphError("cannot join both sides of one edge");
  DartMap r = m;
  auto fresh = [&]() {
    r.twin.push_back(-1);
    r.sigma.push_back(-1);
    return static_cast<int>(r.twin.size()) - 1;
  };
  auto pair = [&](int x, int y) {
    r.twin[x] = y;
    r.twin[y] = x;
  };
  auto ring = [&](int p, int q, int s) {
    r.sigma[p] = q;
    r.sigma[q] = s;
    r.sigma[s] = p;
  };
  const int ta = m.twin[a];
  const int s1 = fresh(), c = fresh(), s2 = fresh();
  const int t1 = fresh(), c2 = fresh(), t2 = fresh();
  pair(c, c2);
  if (a == b) {
    // a - x - y - ta with a digon between x and y.
    pair(a, s1);
    pair(s2, t1);
    pair(t2, ta);
  } else {
    const int tb = m.twin[b];
    pair(a, s1);
    pair(s2, ta);
    pair(b, t1);
    pair(t2, tb);
  }
  ring(s1, c, s2);
  ring(t1, c2, t2);
  return r;
}

std::vector<std::vector<int>> map_faces(const DartMap& m) {
  std::vector<bool> seen(m.darts(), false);
  std::vector<std::vector<int>> out;
  for (int d = 0; d < m.darts(); ++d) {
    if (seen[d]) continue;
    std::vector<int> face;
    for (int x = d; !seen[x]; x = m.sigma[m.twin[x]]) {
      seen[x] = true;
      face.push_back(x);
    }
    out.push_back(std::move(face));
  }
  return out;
}

std::vector<int> map_code(const DartMap& m, std::span<const int> roots, std::span<const int> mirror_roots) {
  std::vector<int> best;
  for (int r : roots) {
    auto c = bfs_code(m.twin, m.sigma, r);
    if (best.empty() || c < best) best = std::move(c);
  }
  if (!mirror_roots.empty()) {
    const auto inv = inverse(m.sigma);
    for (int r : mirror_roots) {
      auto c = bfs_code(m.twin, inv, r);
      if (best.empty() || c < best) best = std::move(c);
    }
  }
  return best;
}

std::vector<int> map_code(const DartMap& m) {
  std::vector<int> all(m.darts());
  std::iota(all.begin(), all.end(), 0);
  return map_code(m, all, all);
}

std::vector<int> rooted_face_code(const DartMap& m, const std::vector<int>& face) {
  std::vector<int> mirrored;
  for (int d : face) mirrored.push_back(m.twin[d]);
  return map_code(m, face, mirrored);
}

DartMap to_dart_map(const PlaneEmbedding& pe) {
  const auto& g = pe.graph;
  auto index = [&](Dart d) { return 2 * g.edge_index(d.edge) + d.side; };
  DartMap m;
  m.twin.resize(2 * g.edge_count());
  m.sigma.assign(2 * g.edge_count(), -1);
  for (int i = 0; i < m.darts(); ++i) m.twin[i] = i ^ 1;
  check_rotation(g, pe.rotation);
  for (const auto& [v, ring] : pe.rotation)
    for (std::size_t i = 0; i < ring.size(); ++i) m.sigma[index(ring[i])] = index(ring[(i + 1) % ring.size()]);
  return m;
}

PlaneEmbedding to_plane_embedding(const DartMap& m) { return convert(m).pe; }

bool is_two_connected(const SignedMultigraph& g) {
  if (!is_connected(g)) return false;
  for (const SignedEdge& e : g.edges())
    if (e.is_loop()) return false;
  if (g.vertex_count() <= 2) return true;
  for (VertexId v : g.vertices())
    if (!is_connected(g.without_vertex(v))) return false;
  return true;
}

std::vector<DartMap> generate_plane_cubic(int n_max) {
  if (n_max > 24) throw SizeLimitError("base generation limited to 24 vertices");
  std::vector<DartMap> out;
  if (n_max < 2) return out;
  std::vector<DartMap> level{theta_map()};
  for (int n = 2; n <= n_max; n += 2) {
    std::sort(level.begin(), level.end(),
              [](const DartMap& x, const DartMap& y) { return map_code(x) < map_code(y); });
    for (auto& m : level) out.push_back(m);
    if (n + 2 > n_max) break;
    std::map<std::vector<int>, DartMap> next;
    for (const DartMap& m : level) {
      for (const auto& face : map_faces(m))
        for (std::size_t i = 0; i < face.size(); ++i)
          for (std::size_t j = i; j < face.size(); ++j) {
            if (face[j] == m.twin[face[i]]) continue;
            DartMap grown = insert_edge(m, face[i], face[j]);
            auto code = map_code(grown);
            next.emplace(std::move(code), std::move(grown));
          }
    }
    level.clear();
    for (auto& [code, m] : next) level.push_back(std::move(m));
  }
  return out;
}

std::vector<RootedBase> generate_bases(int n_max) {
  std::vector<RootedBase> out;
  for (const DartMap& m : generate_plane_cubic(n_max)) {
    const Converted c = convert(m);
    std::map<std::vector<int>, std::vector<int>> faces;
    for (const auto& face : map_faces(m)) faces.emplace(rooted_face_code(m, face), face);
    for (const auto& [code, face] : faces) {
      RootedBase rb{c.pe, {}, code};
      for (int d : face) rb.walk.push_back(c.dart_of[d]);
      out.push_back(std::move(rb));
    }
  }
  return out;
}

std::vector<std::vector<int>> brute_force_plane_cubic_codes(int n) {
  if (n < 2 || n % 2 || n > 10) throw SizeLimitError("brute force limited to even n in [2, 10]");
  std::set<std::vector<int>> codes;
  // Upper-triangular multiplicities with all row sums 3.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  std::vector<int> mult(cells.size(), 0);
  std::vector<int> deg(n, 0);
  auto finish = [&]() {
    DartMap m;
    std::vector<std::vector<int>> at(n);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int t = 0; t < mult[c]; ++t) {
        const int d = m.darts();
        m.twin.push_back(d + 1);
        m.twin.push_back(d);
        at[cells[c].first].push_back(d);
        at[cells[c].second].push_back(d + 1);
      }
    m.sigma.assign(m.darts(), -1);
    for (int mask = 0; mask < (1 << n); ++mask) {
      for (int v = 0; v < n; ++v) {
        const auto& r = at[v];
        const bool flip = (mask >> v) & 1;
        m.sigma[r[0]] = flip ? r[2] : r[1];
        m.sigma[r[1]] = flip ? r[0] : r[2];
        m.sigma[r[2]] = flip ? r[1] : r[0];
      }
      if (!planar_connected(m)) continue;
      if (!is_two_connected(convert(m).pe.graph)) continue;
      codes.insert(map_code(m));
    }
  };
  std::function<void(std::size_t)> fill = [&](std::size_t c) {
    if (c == cells.size()) {
      if (std::all_of(deg.begin(), deg.end(), [](int x) { return x == 3; })) finish();
      return;
    }
    const auto [i, j] = cells[c];
    // Row i is complete once its last cell is decided.
    for (int t = 0; t <= 3 && deg[i] + t <= 3 && deg[j] + t <= 3; ++t) {
      mult[c] = t;
      deg[i] += t;
      deg[j] += t;
      const bool row_done = j == n - 1;
      if (!row_done || deg[i] == 3) fill(c + 1);
      deg[i] -= t;
      deg[j] -= t;
    }
    mult[c] = 0;
  };
  fill(0);
  return {codes.begin(), codes.end()};
}

std::vector<RootedBase> read_bases(std::istream& in, int max_vertices) {
  std::vector<RootedBase> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const std::string where = "base line " + std::to_string(line_no) + ": ";
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, ';')) parts.push_back(part);
    int n = 0;
    int m = 0;
    if (parts.empty() || !(std::istringstream(parts[0]) >> n >> m) || n < 2 || m < 1)
      throw GraphError(where + "bad header");
    if (n > max_vertices) throw SizeLimitError(where + "too many vertices");
    if (static_cast<int>(parts.size()) != m + 2) throw GraphError(where + "expected m edges and a face");
    SignedMultigraph g = SignedMultigraph::with_vertices(n);
    for (int e = 0; e < m; ++e) {
      int u = -1;
      int v = -1;
      if (!(std::istringstream(parts[1 + e]) >> u >> v) || u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError(where + "bad edge " + std::to_string(e));
      g.add_edge(u, v, Sign::Positive);
    }
    std::string face_spec = parts.back();
    const auto colon = face_spec.find(':');
    if (colon == std::string::npos || face_spec.substr(0, colon).find('F') == std::string::npos)
      throw GraphError(where + "missing face");
    std::multiset<EdgeId> want;
    std::istringstream fs(face_spec.substr(colon + 1));
    for (int e; fs >> e;) {
      if (e < 0 || e >= m) throw GraphError(where + "face names unknown edge");
      want.insert(e);
    }
    for (VertexId v : g.vertices())
      if (g.degree(v) != 3) throw GraphError(where + "base is not cubic");
    if (!is_two_connected(g)) throw GraphError(where + "base is not 2-connected and loopless");
    DartMap dm = to_dart_map(PlaneEmbedding{g, [&] {
                                              Rotation r;
                                              for (const SignedEdge& e : g.edges()) {
                                                r[e.u].push_back(Dart{e.id, 0});
                                                r[e.v].push_back(Dart{e.id, 1});
                                              }
                                              return r;
                                            }()});
    std::vector<std::vector<int>> at(n);
    for (int d = 0; d < dm.darts(); ++d) at[d % 2 ? g.edge(d / 2).v : g.edge(d / 2).u].push_back(d);
    bool found = false;
    for (int mask = 0; mask < (1 << n) && !found; ++mask) {
      for (int v = 0; v < n; ++v) {
        const auto& r = at[v];
        const bool flip = (mask >> v) & 1;
        dm.sigma[r[0]] = flip ? r[2] : r[1];
        dm.sigma[r[1]] = flip ? r[0] : r[2];
        dm.sigma[r[2]] = flip ? r[1] : r[0];
      }
      if (!planar_connected(dm)) continue;
      for (const auto& face : map_faces(dm)) {
        std::multiset<EdgeId> have;
        for (int d : face) have.insert(d / 2);
        if (have != want) continue;
        RootedBase rb;
        rb.base.graph = g;
        for (int v = 0; v < n; ++v) {
          auto& ring = rb.base.rotation[v];
          for (int x = at[v][0], i = 0; i < 3; ++i, x = dm.sigma[x]) ring.push_back(Dart{x / 2, x % 2});
        }
        for (int d : face) rb.walk.push_back(Dart{d / 2, d % 2});
        rb.code = rooted_face_code(dm, face);
        out.push_back(std::move(rb));
        found = true;
        break;
      }
    }
    if (!found) throw GraphError(where + "no plane embedding has the given face");
  }
  return out;
}

}  // namespace frustra
