#include "rplan/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rplan {

namespace {

Int factorial(int m) {
  Int f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

bool is_standard(const StandardTableau& t) {
  const auto& rows = t.rows();
  std::vector<int> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i + 1 < rows.size() && rows[i + 1].size() > rows[i].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j + 1 < rows[i].size() && rows[i][j] >= rows[i][j + 1]) return false;
      if (i + 1 < rows.size() && j < rows[i + 1].size() &&
          rows[i][j] >= rows[i + 1][j])
        return false;
      seen.push_back(rows[i][j]);
    }
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (seen[k] != static_cast<int>(k) + 1) return false;
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size(), false);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v - 1] = true;
  }
}

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1) throw std::invalid_argument("diagram parts must be >= 1");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("diagram parts must be weakly decreasing");
  }
}

int YoungDiagram::size() const {
  int s = 0;
  for (int r : rows_) s += r;
  return s;
}

std::string YoungDiagram::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out << ',';
    out << rows_[i];
  }
  return out.str();
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
  std::vector<int> rows;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(part, &pos);
    if (pos != part.size()) throw std::invalid_argument("bad diagram part: " + part);
    rows.push_back(v);
  }
  return YoungDiagram(rows);
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  if (!is_standard(*this))
    throw std::invalid_argument("not a standard Young tableau");
}

YoungDiagram StandardTableau::shape() const {
  std::vector<int> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back(static_cast<int>(r.size()));
  return YoungDiagram(rows);
}

int StandardTableau::size() const {
  int s = 0;
  for (const auto& r : rows_) s += static_cast<int>(r.size());
  return s;
}

int lis(const Permutation& p) {
  std::vector<int> tails;  // tails[k] = smallest tail of an increasing run of length k+1
  for (int v : p.values()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tails.size());
}

int lds(const Permutation& p) {
  const int n = p.size();
  std::vector<int> flipped(p.values());
  for (int& v : flipped) v = n + 1 - v;
  return lis(Permutation(std::move(flipped)));
}

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& p) {
  std::vector<std::vector<int>> ins, rec;
  int step = 0;
  for (int v : p.values()) {
    ++step;
    int value = v;
    std::size_t row = 0;
    for (;; ++row) {
      if (row == ins.size()) {
        ins.emplace_back();
        rec.emplace_back();
      }
      auto it = std::upper_bound(ins[row].begin(), ins[row].end(), value);
      if (it == ins[row].end()) {
        ins[row].push_back(value);
        rec[row].push_back(step);
        break;
      }
      std::swap(value, *it);  // bump
    }
  }
  return {StandardTableau(std::move(ins)), StandardTableau(std::move(rec))};
}

Permutation inverse_rsk(const StandardTableau& insertion,
                        const StandardTableau& recording) {
  if (insertion.shape() != recording.shape())
    throw std::invalid_argument("tableau shapes differ");
  const int n = insertion.size();
  std::vector<std::vector<int>> ins = insertion.rows();
  // Position of each recording label.
  std::vector<std::pair<int, int>> where(n + 1, {-1, -1});
  const auto& rec = recording.rows();
  for (std::size_t i = 0; i < rec.size(); ++i)
    for (std::size_t j = 0; j < rec[i].size(); ++j)
      where[rec[i][j]] = {static_cast<int>(i), static_cast<int>(j)};

  std::vector<int> out(n);
  for (int label = n; label >= 1; --label) {
    auto [row, col] = where[label];
    int value = ins[row][col];
    ins[row].pop_back();
    if (ins[row].empty()) ins.pop_back();
    // Reverse-bump upward.
    for (int r = row - 1; r >= 0; --r) {
      auto it = std::lower_bound(ins[r].begin(), ins[r].end(), value);
      --it;  // largest entry < value; exists in any valid reverse bump
      std::swap(value, *it);
    }
    out[label - 1] = value;
  }
  return Permutation(std::move(out));
}

std::vector<YoungDiagram> partitions(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("need n >= 0 and d >= 1");
  std::vector<YoungDiagram> out;
  std::vector<int> parts;
  // Largest first part first gives reverse-lexicographic order.
  std::function<void(int, int, int)> rec = [&](int remaining, int max_part,
                                               int slots) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    if (slots == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      if (static_cast<long long>(p) * slots < remaining) break;
      parts.push_back(p);
      rec(remaining - p, p, slots - 1);
      parts.pop_back();
    }
  };
  rec(n, n, d);
  if (n == 0) out = {YoungDiagram()};
  return out;
}

Int hook_count(const YoungDiagram& shape) {
  const auto& rows = shape.rows();
  Int denom = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int arm = rows[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < rows.size(); ++k)
        if (rows[k] > j) ++leg;
      denom *= arm + leg + 1;
    }
  }
  Int num = factorial(shape.size());
  Int result;
  mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
  return result;
}

Int det_count(const YoungDiagram& shape, int d) {
  if (shape.row_count() > d)
    throw std::invalid_argument("shape has more rows than d");
  const int n = shape.size();

  // Row i of the factorial matrix is scaled by (lambda_i - i + d)! so that
  // entries become integer falling-factorial products:
  //   M[i][j] = (lambda_i - i + d)! / (lambda_i - i + j)!,  0 if arg < 0.
  std::vector<std::vector<Int>> m(d, std::vector<Int>(d));
  Int scale = 1;
  for (int i = 0; i < d; ++i) {
    const int top = shape.row(i) - i + d - 1;  // 0-based: lambda_i - (i+1) + d
    scale *= factorial(top);
    for (int j = 0; j < d; ++j) {
      const int arg = shape.row(i) - i + j;  // lambda_i - (i+1) + (j+1)
      if (arg < 0) {
        m[i][j] = 0;
      } else {
        Int prod = 1;
        for (int t = arg + 1; t <= top; ++t) prod *= t;
        m[i][j] = prod;
      }
    }
  }

  // Bareiss fraction-free elimination.
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < d - 1; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < d; ++r)
        if (m[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Int det = m[d - 1][d - 1] * sign;

  Int num = factorial(n) * det;
  Int result;
  mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), scale.get_mpz_t());
  return result;
}

Int path_count_oracle(const YoungDiagram& shape, int d) {
  if (shape.row_count() > d)
    throw std::invalid_argument("shape has more rows than d");
  const int n = shape.size();
  if (n > 12) throw ResourceLimitError("path_count_oracle guard: |shape| <= 12");

  std::vector<int> pos(d), target(d);
  for (int i = 0; i < d; ++i) {
    pos[i] = d - i;
    target[i] = shape.row(i) + d - i;
  }
  Int count = 0;
  std::function<void(int)> walk = [&](int remaining) {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (int i = 0; i < d; ++i) {
      if (pos[i] >= target[i]) continue;
      if (i > 0 && pos[i] + 1 >= pos[i - 1]) continue;  // collision
      ++pos[i];
      walk(remaining - 1);
      --pos[i];
    }
  };
  walk(n);
  return count;
}

StandardTableau sample_syt(const YoungDiagram& shape, RandomStream& rng) {
  std::vector<int> rows = shape.rows();
  const int n = shape.size();
  std::vector<std::vector<int>> filled(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) filled[i].assign(rows[i], 0);

  std::vector<int> cur = rows;
  for (int label = n; label >= 1; --label) {
    std::vector<int> nonempty;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i] > 0) nonempty.push_back(static_cast<int>(i));

    // Corner rows of the current shape.
    std::vector<int> corners;
    for (int i : nonempty)
      if (i + 1 >= static_cast<int>(cur.size()) || cur[i] > cur[i + 1])
        corners.push_back(i);

    std::vector<int> trimmed;
    for (int r : cur)
      if (r > 0) trimmed.push_back(r);
    const Int total = hook_count(YoungDiagram(trimmed));

    // Pick corner c with probability hook_count(shape - c) / hook_count(shape).
    Rat u(rng.uniform());
    Rat threshold = u * Rat(total);
    Int cum = 0;
    int chosen = corners.back();
    for (int c : corners) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        int r = cur[i] - (static_cast<int>(i) == c ? 1 : 0);
        if (r > 0) sub.push_back(r);
      }
      cum += hook_count(YoungDiagram(sub));
      if (Rat(cum) > threshold) {
        chosen = c;
        break;
      }
    }
    filled[chosen][cur[chosen] - 1] = label;
    --cur[chosen];
  }
  return StandardTableau(std::move(filled));
}

}  // namespace rplan
