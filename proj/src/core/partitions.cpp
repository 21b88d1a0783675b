#include "core/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "core/error.hpp"

namespace genus_forge {

namespace {

void generate(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void compose(int remaining, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur.push_back(v);
    compose(remaining - v, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions(int n) {
  if (n < 0) throw DomainError("partitions of a negative number");
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  generate(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<int> multiplicities(const Partition& p, int n) {
  std::vector<int> k(n + 1, 0);
  for (int part : p) ++k.at(part);
  return k;
}

std::string chern_key(const Partition& p) {
  if (p.empty()) return "1";
  std::map<int, int> counts;
  for (int part : p) ++counts[part];
  std::string out;
  for (const auto& [part, count] : counts) {
    out += "c" + std::to_string(part);
    if (count > 1) out += "^" + std::to_string(count);
  }
  return out;
}

std::vector<std::vector<int>> weak_compositions(int n, int k) {
  if (k <= 0) return n == 0 ? std::vector<std::vector<int>>{{}} : std::vector<std::vector<int>>{};
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compose(n, k, cur, out);
  return out;
}

}  // namespace genus_forge
