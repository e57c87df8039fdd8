// Standalone generator for the reference block report used by the golden
// test. Every table row below is transcribed by hand from the worked
// two-negative-singleton example; nothing here calls the library, so the
// output is an independent oracle for gl21_block_report.
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using W = std::vector<int>;
using nlohmann::json;

W spine(int k) { return {0, k, k}; }
W low(int i) { return {-i, 0, -i}; }   // i >= 1, below the spine
W high(int j) { return {j, 0, j}; }    // j >= 1, above the spine

struct Row {
  W w;
  long long m;
};

void sort_rows(std::vector<Row>& rows) {
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.w < b.w; });
}

// The block of (0,0|0): one spine weight per level plus one side weight at
// every nonzero level.
std::vector<W> members(int bound) {
  std::vector<W> out;
  for (int k = -bound; k <= bound; ++k) {
    out.push_back(spine(k));
    if (k < 0) out.push_back(low(-k));
    if (k > 0) out.push_back(high(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Row> tilting_rows(const W& f) {
  const int a = f[0], b = f[1];
  std::vector<Row> r;
  if (a == 0 && b <= -1) {
    int i = -b;
    r = {{spine(-i), 1}, {low(i), 1}, {spine(-i - 1), 1}, {low(i + 1), 1}};
  } else if (a <= -1) {
    int i = -a;
    r = {{low(i), 1}, {low(i + 1), 1}};
  } else if (a == 0 && b == 0) {
    r = {{spine(0), 1}, {spine(-1), 1}, {low(1), 1}};
  } else if (a == 0 && b == 1) {
    r = {{spine(1), 1}, {spine(0), 1}, {low(1), 1}};
  } else if (a == 1) {
    r = {{high(1), 1}, {spine(1), 1}, {spine(0), 1}};
  } else if (a == 0) {
    int j = b;
    r = {{spine(j), 1}, {spine(j - 1), 1}};
  } else {
    int j = a;
    r = {{high(j), 1}, {spine(j), 1}, {high(j - 1), 1}, {spine(j - 1), 1}};
  }
  sort_rows(r);
  return r;
}

std::vector<Row> verma_rows(const W& f) {
  const int a = f[0], b = f[1];
  std::vector<Row> r;
  if (a == 0 && b == 1) {
    r = {{spine(1), 1}, {spine(0), 1}};
  } else if (a == 1) {
    r = {{high(1), 1}, {spine(1), 1}, {spine(0), 1}, {spine(-1), 1}};
  } else {
    return tilting_rows(f);
  }
  sort_rows(r);
  return r;
}

std::vector<Row> projective_rows(const W& f) {
  const int a = f[0], b = f[1];
  std::vector<Row> r;
  if (a == -1) {
    r = {{spine(-1), 1}, {low(1), 1}, {spine(0), 1}};
  } else if (a <= -2) {
    int i = -a;
    r = {{spine(-i), 1}, {low(i), 1}, {spine(-i + 1), 1}, {low(i - 1), 1}};
  } else if (a == 0 && b == -1) {
    r = {{spine(-1), 1}, {spine(0), 1}, {high(1), 1}};
  } else if (a == 0 && b <= -2) {
    int i = -b;
    r = {{spine(-i), 1}, {spine(-i + 1), 1}};
  } else if (a == 0 && b == 0) {
    r = {{spine(0), 1}, {spine(1), 1}, {high(1), 1}};
  } else if (a == 0) {
    int j = b;
    r = {{spine(j), 1}, {high(j), 1}, {spine(j + 1), 1}, {high(j + 1), 1}};
  } else {
    int j = a;
    r = {{high(j), 1}, {high(j + 1), 1}};
  }
  sort_rows(r);
  return r;
}

// Irreducible characters in this block are infinite alternating sums over
// the chains below the head; the engine cuts them at the first weight whose
// construction leaves the value window, which sits `depth` levels down.
std::vector<Row> irreducible_rows(const W& f, int depth) {
  const int a = f[0], b = f[1];
  std::vector<Row> r;
  auto sign = [](int t) -> long long { return t % 2 == 0 ? 1 : -1; };
  if (a <= -1) {
    int i = -a;
    for (int u = i; u <= i + depth - 1; ++u) r.push_back({low(u), sign(u - i)});
  } else if (a == 0 && b <= -1) {
    int i = -b;
    for (int u = i; u <= i + depth - 1; ++u) {
      r.push_back({spine(-u), sign(u - i)});
      r.push_back({low(u), -sign(u - i)});
    }
  } else if (a == 0) {
    int j = b;
    for (int u = -(depth - 1); u <= j; ++u) r.push_back({spine(u), sign(j - u)});
  } else {
    int j = a;
    for (int u = 1; u <= j; ++u) {
      r.push_back({high(u), sign(j - u)});
      r.push_back({spine(u), -sign(j - u)});
    }
    for (int i = 1; i <= depth - 1; ++i) {
      r.push_back({spine(-i), sign(j + i - 1)});
      r.push_back({low(i), -sign(j + i - 1)});
    }
  }
  sort_rows(r);
  return r;
}

// Cover relations: the spine climbs one level at a time, each below-spine
// side weight sits under its spine level with the side chain ordered toward
// zero, and each above-spine side weight caps its spine level with the side
// chain ordered away from zero.
std::vector<std::pair<W, W>> cover_pairs(int bound) {
  std::vector<std::pair<W, W>> e;
  for (int k = -bound + 1; k <= bound; ++k) e.push_back({spine(k - 1), spine(k)});
  for (int i = 1; i <= bound; ++i) e.push_back({low(i), spine(-i)});
  for (int i = 1; i + 1 <= bound; ++i) e.push_back({low(i + 1), low(i)});
  for (int j = 1; j <= bound; ++j) e.push_back({spine(j), high(j)});
  for (int j = 1; j + 1 <= bound; ++j) e.push_back({high(j), high(j + 1)});
  return e;
}

json weight_json(const W& f) {
  json a = json::array();
  for (int v : f) a.push_back(v);
  return a;
}

json rows_json(const std::vector<Row>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back({weight_json(r.w), r.m});
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  int bound = 5;
  int radius = 8;
  std::string out_path;
  try {
    if (argc > 1) bound = std::stoi(argv[1]);
    if (argc > 2) radius = std::stoi(argv[2]);
  } catch (const std::exception&) {
    std::cerr << "usage: gl21-golden [bound] [radius] [out.json]\n";
    return 2;
  }
  if (argc > 3) out_path = argv[3];
  const int depth = std::max(radius, bound + 3);

  const auto mem = members(bound);
  std::map<W, int> idx;
  for (std::size_t i = 0; i < mem.size(); ++i) idx[mem[i]] = static_cast<int>(i);

  json report;
  report["signature"] = "1,1|1";
  report["bound"] = bound;
  json mj = json::array();
  for (const auto& f : mem) mj.push_back(weight_json(f));
  report["members"] = mj;

  std::vector<std::pair<int, int>> edge_ids;
  for (const auto& [a, b] : cover_pairs(bound)) edge_ids.push_back({idx.at(a), idx.at(b)});
  std::sort(edge_ids.begin(), edge_ids.end());
  json edges = json::array();
  for (const auto& [ia, ib] : edge_ids) edges.push_back({ia, ib});
  report["cover_edges"] = edges;

  json tables;
  for (const std::string kind : {"tilting", "verma", "projective", "irreducible"}) {
    json arr = json::array();
    for (std::size_t i = 0; i < mem.size(); ++i) {
      std::vector<Row> rows;
      if (kind == "tilting") rows = tilting_rows(mem[i]);
      if (kind == "verma") rows = verma_rows(mem[i]);
      if (kind == "projective") rows = projective_rows(mem[i]);
      if (kind == "irreducible") rows = irreducible_rows(mem[i], depth);
      arr.push_back({{"head", static_cast<int>(i)}, {"rows", rows_json(rows)}});
    }
    tables[kind] = arr;
  }
  report["tables"] = tables;

  auto same = [](const std::vector<Row>& x, const std::vector<Row>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].w != y[i].w || x[i].m != y[i].m) return false;
    return true;
  };
  json pairs = json::array();
  for (const auto& pm : mem) {
    for (const auto& um : mem) {
      if (same(projective_rows(pm), tilting_rows(um))) {
        pairs.push_back({idx.at(pm), idx.at(um)});
        break;
      }
    }
  }
  report["projective_tilting"] = pairs;

  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream os(out_path);
    os << report.dump(2) << "\n";
  }
  return 0;
}
