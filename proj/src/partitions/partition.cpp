#include "qhurwitz/partitions/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "qhurwitz/core/error.hpp"

namespace qhurwitz::partitions {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) raise(ErrorCode::InvalidArgument, "partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 1 : static_cast<std::size_t>(parts_.front()) + 1, 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; !parts_.empty() && j <= parts_.front(); ++j) {
    int cnt = 0;
    for (int p : parts_)
      if (p >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(c);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (...) {
      used = 0;
    }
    if (used != tok.size()) raise(ErrorCode::InvalidArgument, "bad partition part '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(parts);
}

namespace {

void gen(int n, int max_part, int max_len, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    if (static_cast<long>(p) * max_len < n) break;
    cur.push_back(p);
    gen(n - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_len) {
  if (n < 0) raise(ErrorCode::InvalidArgument, "negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, max_len, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, std::max(n, 0)); }

std::vector<Partition> partitions_with_colength(int n, int c) {
  std::vector<Partition> out;
  if (c < 0 || c >= n + (n == 0 ? 1 : 0)) return out;
  for (auto& p : partitions_of(n, n - c))
    if (p.length() == n - c) out.push_back(std::move(p));
  return out;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rat z_mu(const Partition& mu) {
  Int z = 1;
  auto m = mu.multiplicities();
  for (std::size_t j = 1; j < m.size(); ++j) {
    z *= factorial(m[j]);
    for (int r = 0; r < m[j]; ++r) z *= static_cast<long>(j);
  }
  return Rat(z);
}

Int class_size(const Partition& mu) {
  Rat c = Rat(factorial(mu.weight())) / z_mu(mu);
  return c.get_num();
}

Rat dim_irrep(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  Int hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return Rat(factorial(lambda.weight()) / hooks);
}

ColengthContents colength_contents(const Partition& lambda) {
  ColengthContents r{lambda.colength(), {}};
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) r.contents.push_back(j - i);
  return r;
}

int euler_characteristic(int n, const Partition& mu, int d) {
  if (mu.weight() != n) raise(ErrorCode::WeightMismatch, "profile weight differs from N");
  return n + mu.length() - d;
}

ProfileList::ProfileList(std::vector<Partition> profiles) : p_(std::move(profiles)) {
  if (p_.empty()) raise(ErrorCode::InvalidArgument, "empty profile list");
  for (const auto& p : p_)
    if (p.weight() != p_.front().weight())
      raise(ErrorCode::WeightMismatch, "profiles of different weight");
}

int ProfileList::total_colength() const {
  int s = 0;
  for (const auto& p : p_) s += p.colength();
  return s;
}

std::string ProfileList::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < p_.size(); ++i) s += (i ? ";" : "") + p_[i].to_string();
  return s;
}

ProfileList ProfileList::parse(const std::string& text) {
  std::vector<Partition> ps;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) ps.push_back(Partition::parse(tok));
  return ProfileList(ps);
}

}  // namespace qhurwitz::partitions
