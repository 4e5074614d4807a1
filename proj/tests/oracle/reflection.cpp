#include "oracle/reflection.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

struct ModulusInfo {
  int deg;
  std::array<long long, 3> red2;  // c^2 in the basis 1, c, c^2
  std::array<long long, 3> red3;  // c^3
};

// Minimal polynomials of 2cos(pi/m).
ModulusInfo modulus_for(int m) {
  switch (m) {
    case 4:
      return {2, {2, 0, 0}, {}};  // c^2 = 2
    case 5:
      return {2, {1, 1, 0}, {}};  // c^2 = c + 1
    case 6:
      return {2, {3, 0, 0}, {}};  // c^2 = 3
    case 7:
      return {3, {0, 0, 1}, {-1, 2, 1}};  // c^3 = c^2 + 2c - 1
    default:
      throw std::runtime_error("oracle: unsupported bond order " + std::to_string(m));
  }
}

}  // namespace

RefGroup::RefGroup(const dcoset::CoxeterMatrix& m, std::size_t cap) : rank_(m.rank()) {
  if (rank_ > 3) throw std::runtime_error("oracle: rank > 3 not supported");

  int exotic = 0;
  for (int s = 0; s < rank_; ++s)
    for (int t = s + 1; t < rank_; ++t)
      if (m.m(s, t) > 3) {
        if (exotic != 0 && exotic != m.m(s, t))
          throw std::runtime_error("oracle: several distinct bond orders > 3");
        exotic = m.m(s, t);
      }
  if (exotic != 0) {
    const ModulusInfo info = modulus_for(exotic);
    deg_ = info.deg;
    red2_ = info.red2;
    red3_ = info.red3;
  } else {
    deg_ = 1;
  }

  auto two_cos = [&](int order) -> Poly {
    if (order == 2) return {0, 0, 0};
    if (order == 3) return {1, 0, 0};
    return {0, 1, 0};  // the ring generator c, by construction of the modulus
  };

  gens_.resize(rank_);
  for (int s = 0; s < rank_; ++s) {
    Mat mat{};
    for (int i = 0; i < rank_; ++i) mat[i * 3 + i] = Poly{1, 0, 0};
    for (int j = 0; j < rank_; ++j)
      mat[s * 3 + j] = (j == s) ? Poly{-1, 0, 0} : two_cos(m.m(s, j));
    gens_[s] = mat;
  }

  Mat id{};
  for (int i = 0; i < rank_; ++i) id[i * 3 + i] = Poly{1, 0, 0};
  mats_.push_back(id);
  index_.emplace(id, 0);
  len_.push_back(0);
  words_.emplace_back();
  right_.resize(rank_, SIZE_MAX);

  for (std::size_t e = 0; e < mats_.size(); ++e) {
    for (int s = 0; s < rank_; ++s) {
      const Mat next = mul(mats_[e], gens_[s]);
      auto [it, fresh] = index_.emplace(next, mats_.size());
      if (fresh) {
        if (mats_.size() >= cap) throw std::runtime_error("oracle: cap exceeded");
        mats_.push_back(next);
        len_.push_back(len_[e] + 1);
        words_.push_back(words_[e]);
        words_.back().push_back(s);
        right_.resize(mats_.size() * rank_, SIZE_MAX);
      }
      right_[e * rank_ + s] = it->second;
    }
  }

  left_.resize(mats_.size() * rank_);
  for (std::size_t e = 0; e < mats_.size(); ++e)
    for (int s = 0; s < rank_; ++s) left_[e * rank_ + s] = lookup(mul(gens_[s], mats_[e]));
}

RefGroup::Poly RefGroup::mul(const Poly& a, const Poly& b) const {
  // Inputs have degree < deg_, so the raw product has degree
  // <= 2*(deg_-1).
  std::array<long long, 5> acc{};
  for (int i = 0; i < deg_; ++i)
    for (int j = 0; j < deg_; ++j) acc[i + j] += a[i] * b[j];
  if (deg_ == 1) return {acc[0], 0, 0};
  if (deg_ == 2) {
    acc[0] += acc[2] * red2_[0];
    acc[1] += acc[2] * red2_[1];
    return {acc[0], acc[1], 0};
  }
  // deg_ == 3: fold c^4 = c * c^3, then c^3.
  std::array<long long, 3> r4{0, red3_[0], red3_[1]};
  for (int k = 0; k < 3; ++k) r4[k] += red3_[2] * red3_[k];
  for (int k = 0; k < 3; ++k) acc[k] += acc[4] * r4[k];
  for (int k = 0; k < 3; ++k) acc[k] += acc[3] * red3_[k];
  return {acc[0], acc[1], acc[2]};
}

RefGroup::Mat RefGroup::mul(const Mat& a, const Mat& b) const {
  Mat out{};
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) {
      const Poly& aik = a[i * 3 + k];
      if (aik == Poly{0, 0, 0}) continue;
      for (int j = 0; j < rank_; ++j) {
        const Poly prod = mul(aik, b[k * 3 + j]);
        Poly& slot = out[i * 3 + j];
        for (int d = 0; d < 3; ++d) slot[d] += prod[d];
      }
    }
  return out;
}

std::size_t RefGroup::lookup(const Mat& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) throw std::runtime_error("oracle: matrix outside the group");
  return it->second;
}

std::size_t RefGroup::generator(int s) const { return lookup(gens_[s]); }

std::size_t RefGroup::multiply(std::size_t a, std::size_t b) const {
  return lookup(mul(mats_[a], mats_[b]));
}

std::size_t RefGroup::inverse(std::size_t a) const {
  std::size_t acc = 0;
  const std::vector<int>& w = words_[a];
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = right(acc, *it);
  return acc;
}

std::size_t RefGroup::from_word(const std::vector<int>& w) const {
  std::size_t acc = 0;
  for (int s : w) acc = right(acc, s);
  return acc;
}

std::vector<char> RefGroup::subseq_down(std::size_t y) const {
  const std::vector<int>& w = words_[y];
  std::vector<char> out(size(), 0);
  const std::uint32_t count = std::uint32_t{1} << w.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::size_t acc = 0;
    for (std::size_t k = 0; k < w.size(); ++k)
      if ((mask >> k) & 1) acc = right(acc, w[k]);
    out[acc] = 1;
  }
  return out;
}

std::size_t RefGroup::demazure(std::size_t a, std::size_t b) const {
  std::size_t acc = a;
  for (int s : words_[b]) {
    const std::size_t next = right(acc, s);
    if (len_[next] > len_[acc]) acc = next;
  }
  return acc;
}

std::size_t RefGroup::longest_in(std::uint32_t mask) const {
  std::size_t w = 0;
  for (bool rose = true; rose;) {
    rose = false;
    for (int s = 0; s < rank_; ++s) {
      if (!((mask >> s) & 1)) continue;
      const std::size_t ws = right(w, s);
      if (len_[ws] > len_[w]) {
        w = ws;
        rose = true;
        break;
      }
    }
  }
  return w;
}

std::vector<std::size_t> RefGroup::parabolic(std::uint32_t mask) const {
  std::vector<char> seen(size(), 0);
  std::vector<std::size_t> out{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int s = 0; s < rank_; ++s) {
      if (!((mask >> s) & 1)) continue;
      const std::size_t next = right(out[k], s);
      if (!seen[next]) {
        seen[next] = 1;
        out.push_back(next);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> RefGroup::orbit(std::size_t w, std::uint32_t i,
                                         std::uint32_t j) const {
  std::vector<char> seen(size(), 0);
  std::vector<std::size_t> out{w};
  seen[w] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int s = 0; s < rank_; ++s) {
      if ((i >> s) & 1) {
        const std::size_t sw = left(s, out[k]);
        if (!seen[sw]) {
          seen[sw] = 1;
          out.push_back(sw);
        }
      }
      if ((j >> s) & 1) {
        const std::size_t ws = right(out[k], s);
        if (!seen[ws]) {
          seen[ws] = 1;
          out.push_back(ws);
        }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
