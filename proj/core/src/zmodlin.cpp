#include "knot/zmodlin.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

namespace knot {

void ModMatrix::add_row(ModRow r) {
  if (r.size() != cols) throw BadParameter("row length mismatch");
  for (auto& x : r) x %= n;
  rows.push_back(std::move(r));
}

namespace {

long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// unit u mod n with u*a = gcd(a,n) mod n
std::uint64_t unit_for(std::uint64_t a, std::uint64_t n) {
  a %= n;
  if (a == 0) return 1;
  std::uint64_t g = gcd_u(a, n);
  std::uint64_t m = n / g;
  if (m == 1) return 1;
  long long x, y;
  long long a0 = static_cast<long long>((a / g) % m);
  egcd(a0, static_cast<long long>(m), x, y);
  std::uint64_t u = static_cast<std::uint64_t>(((x % (long long)m) + (long long)m) % (long long)m);
  while (gcd_u(u, n) != 1) u += m;
  return u % n;
}

struct HowellWork {
  std::uint64_t n;
  std::size_t cols;
  std::map<std::size_t, ModRow> basis;  // pivot column -> row
  std::vector<ModRow> queue;

  void add(ModRow r) {
    for (;;) {
      for (auto& x : r) x %= n;
      std::size_t c = 0;
      while (c < r.size() && r[c] == 0) ++c;
      if (c == r.size()) return;
      auto it = basis.find(c);
      if (it == basis.end()) {
        std::uint64_t u = unit_for(r[c], n);
        for (auto& x : r) x = (x * u) % n;
        std::uint64_t piv = r[c];
        std::uint64_t ann = n / gcd_u(piv, n);
        if (ann != 0 && (ann % n) != 0) {
          ModRow extra(r.size());
          bool nz = false;
          for (std::size_t j = 0; j < r.size(); ++j) {
            extra[j] = (r[j] * (ann % n)) % n;
            nz |= extra[j] != 0;
          }
          if (nz) queue.push_back(std::move(extra));
        }
        basis.emplace(c, std::move(r));
        return;
      }
      ModRow& b = it->second;
      std::uint64_t pv = b[c];
      if (r[c] % pv == 0) {
        std::uint64_t q = (r[c] / pv) % n;
        for (std::size_t j = c; j < r.size(); ++j)
          r[j] = (r[j] + (n - (b[j] * q) % n)) % n;
      } else {
        long long x, y;
        long long g = egcd(static_cast<long long>(pv),
                           static_cast<long long>(r[c]), x, y);
        std::uint64_t xs = static_cast<std::uint64_t>(((x % (long long)n) + (long long)n) % (long long)n);
        std::uint64_t ys = static_cast<std::uint64_t>(((y % (long long)n) + (long long)n) % (long long)n);
        ModRow comb(r.size());
        for (std::size_t j = 0; j < r.size(); ++j)
          comb[j] = (b[j] * xs + r[j] * ys) % n;
        std::uint64_t q1 = (pv / static_cast<std::uint64_t>(g)) % n;
        std::uint64_t q2 = (r[c] / static_cast<std::uint64_t>(g)) % n;
        ModRow rnew(r.size());
        for (std::size_t j = 0; j < r.size(); ++j)
          rnew[j] = (r[j] * q1 + (n - (b[j] * q2) % n)) % n;
        basis.erase(it);
        queue.push_back(std::move(comb));
        r = std::move(rnew);
      }
    }
  }

  HowellBasis finish() {
    while (!queue.empty()) {
      ModRow r = std::move(queue.back());
      queue.pop_back();
      add(std::move(r));
    }
    HowellBasis out;
    out.n = n;
    out.cols = cols;
    std::vector<std::size_t> pivs;
    for (auto& [c, row] : basis) {
      pivs.push_back(c);
      out.rows.push_back(row);
    }
    // reduce entries above each pivot into [0, pivot)
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
      std::size_t c = pivs[i];
      std::uint64_t pv = out.rows[i][c];
      for (std::size_t j = 0; j < i; ++j) {
        std::uint64_t e = out.rows[j][c];
        std::uint64_t q = e / pv;
        if (q)
          for (std::size_t t = c; t < cols; ++t)
            out.rows[j][t] =
                (out.rows[j][t] + (n - (out.rows[i][t] * q) % n)) % n;
      }
    }
    return out;
  }
};

}  // namespace

HowellBasis howell(const ModMatrix& m) {
  if (m.n == 1) return HowellBasis{1, m.cols, {}};
  HowellWork w{m.n, m.cols, {}, {}};
  for (const ModRow& r : m.rows) w.add(ModRow(r));
  while (!w.queue.empty()) {
    ModRow r = std::move(w.queue.back());
    w.queue.pop_back();
    w.add(std::move(r));
  }
  return w.finish();
}

HowellBasis howell_of_rows(std::uint64_t n, std::size_t cols,
                           const std::vector<ModRow>& rows) {
  ModMatrix m(n, cols);
  for (const auto& r : rows) m.add_row(ModRow(r));
  return howell(m);
}

HowellBasis kernel(const ModMatrix& m) {
  // howell of [M | I]; rows with zero M-part carry kernel combinations
  std::size_t nr = m.row_count();
  if (m.n == 1) return HowellBasis{1, nr, {}};
  ModMatrix aug(m.n, m.cols + nr);
  for (std::size_t i = 0; i < nr; ++i) {
    ModRow r(m.cols + nr, 0);
    std::copy(m.rows[i].begin(), m.rows[i].end(), r.begin());
    r[m.cols + i] = 1;
    aug.rows.push_back(std::move(r));
  }
  HowellBasis h = howell(aug);
  HowellBasis out;
  out.n = m.n;
  out.cols = nr;
  for (const ModRow& r : h.rows) {
    bool zero = true;
    for (std::size_t j = 0; j < m.cols; ++j)
      if (r[j]) {
        zero = false;
        break;
      }
    if (zero) out.rows.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(m.cols), r.end());
  }
  return out;
}

std::optional<ModRow> solve(const ModMatrix& m, const ModRow& target) {
  if (target.size() != m.cols) throw BadParameter("target length mismatch");
  std::size_t nr = m.row_count();
  if (m.n == 1) return ModRow(nr, 0);
  ModMatrix aug(m.n, m.cols + nr);
  for (std::size_t i = 0; i < nr; ++i) {
    ModRow r(m.cols + nr, 0);
    std::copy(m.rows[i].begin(), m.rows[i].end(), r.begin());
    r[m.cols + i] = 1;
    aug.rows.push_back(std::move(r));
  }
  HowellBasis h = howell(aug);
  ModRow t(target);
  for (auto& x : t) x %= m.n;
  ModRow coef(nr, 0);
  for (const ModRow& r : h.rows) {
    std::size_t c = 0;
    while (c < m.cols && r[c] == 0) ++c;
    if (c == m.cols) continue;
    if (t[c] == 0) continue;
    if (t[c] % r[c]) return std::nullopt;
    std::uint64_t q = t[c] / r[c];
    for (std::size_t j = 0; j < m.cols; ++j)
      t[j] = (t[j] + (m.n - (r[j] * q) % m.n)) % m.n;
    for (std::size_t j = 0; j < nr; ++j)
      coef[j] = (coef[j] + r[m.cols + j] * q) % m.n;
  }
  for (std::uint64_t x : t)
    if (x) return std::nullopt;
  // verify
  ModRow check(m.cols, 0);
  for (std::size_t i = 0; i < nr; ++i)
    if (coef[i])
      for (std::size_t j = 0; j < m.cols; ++j)
        check[j] = (check[j] + coef[i] * m.rows[i][j]) % m.n;
  for (std::size_t j = 0; j < m.cols; ++j)
    if (check[j] != target[j] % m.n) return std::nullopt;
  return coef;
}

HowellBasis annihilator(const HowellBasis& span) {
  // {w : v . w^T = 0 for all v}: kernel of the transpose
  ModMatrix t(span.n, span.rows.size());
  t.rows.assign(span.cols, ModRow(span.rows.size(), 0));
  for (std::size_t i = 0; i < span.rows.size(); ++i)
    for (std::size_t j = 0; j < span.cols; ++j)
      t.rows[j][i] = span.rows[i][j];
  if (span.rows.empty()) {
    // everything annihilates the zero span
    HowellBasis full;
    full.n = span.n;
    full.cols = span.cols;
    for (std::size_t i = 0; i < span.cols; ++i) {
      ModRow e(span.cols, 0);
      e[i] = 1;
      full.rows.push_back(std::move(e));
    }
    return full;
  }
  return kernel(t);
}

std::uint64_t HowellBasis::span_size() const {
  std::uint64_t s = 1;
  for (const ModRow& r : rows) {
    std::size_t c = 0;
    while (c < cols && r[c] == 0) ++c;
    s *= n / gcd_u(r[c], n);
  }
  return s;
}

std::uint64_t HowellBasis::span_size_valuation(std::uint64_t q) const {
  std::uint64_t v = 0;
  for (const ModRow& r : rows) {
    std::size_t c = 0;
    while (c < cols && r[c] == 0) ++c;
    std::uint64_t m = n / gcd_u(r[c], n);
    while (m % q == 0) {
      m /= q;
      ++v;
    }
    if (m != 1) throw BadParameter("span size is not a power of q");
  }
  return v;
}

bool HowellBasis::contains(const ModRow& v) const {
  if (v.size() != cols) throw BadParameter("vector length mismatch");
  ModRow t(v);
  for (auto& x : t) x %= n;
  for (const ModRow& r : rows) {
    std::size_t c = 0;
    while (c < cols && r[c] == 0) ++c;
    if (t[c] == 0) continue;
    if (t[c] % r[c]) return false;
    std::uint64_t q = t[c] / r[c];
    for (std::size_t j = c; j < cols; ++j)
      t[j] = (t[j] + (n - (r[j] * q) % n)) % n;
  }
  for (std::uint64_t x : t)
    if (x) return false;
  return true;
}

bool HowellBasis::contains_span(const HowellBasis& other) const {
  for (const ModRow& r : other.rows)
    if (!contains(r)) return false;
  return true;
}

std::uint64_t AbelianInvariants::order() const {
  std::uint64_t o = 1;
  for (std::uint64_t d : factors) o *= d;
  return o;
}

std::string AbelianInvariants::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << factors[i];
  }
  return os.str();
}

std::vector<std::uint64_t> smith_invariants(
    std::vector<std::vector<long long>> a, std::size_t cols) {
  std::size_t rows = a.size();
  std::vector<std::uint64_t> invs;
  std::size_t r = 0, c = 0;
  auto aval = [](long long x) { return x < 0 ? -x : x; };
  while (r < rows && c < cols) {
    // smallest nonzero pivot keeps the entries tame
    std::size_t pi = rows, pj = cols;
    long long best = 0;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = c; j < cols; ++j)
        if (a[i][j] != 0 && (best == 0 || aval(a[i][j]) < best)) {
          best = aval(a[i][j]);
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[r], a[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][c], a[i][pj]);
    for (;;) {
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        long long q = a[i][c] / a[r][c];
        if (q)
          for (std::size_t j = c; j < cols; ++j) {
            __int128 t = (__int128)a[i][j] - (__int128)q * a[r][j];
            if (t > INT64_MAX || t < INT64_MIN)
              throw BadParameter("smith_invariants: entry overflow");
            a[i][j] = (long long)t;
          }
        if (a[i][c] != 0) {
          std::swap(a[r], a[i]);
          clean = false;
        }
      }
      if (!clean) continue;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        long long q = a[r][j] / a[r][c];
        if (q)
          for (std::size_t i = r; i < rows; ++i) {
            __int128 t = (__int128)a[i][j] - (__int128)q * a[i][c];
            if (t > INT64_MAX || t < INT64_MIN)
              throw BadParameter("smith_invariants: entry overflow");
            a[i][j] = (long long)t;
          }
        if (a[r][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][c], a[i][j]);
          clean = false;
        }
      }
      if (clean) break;
    }
    invs.push_back(static_cast<std::uint64_t>(aval(a[r][c])));
    ++r;
    ++c;
  }
  // massage into a divisibility chain
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < invs.size(); ++i) {
      if (invs[i + 1] % invs[i]) {
        std::uint64_t g = std::gcd(invs[i], invs[i + 1]);
        std::uint64_t l = invs[i] / g * invs[i + 1];
        invs[i] = g;
        invs[i + 1] = l;
        changed = true;
      }
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : invs)
    if (d > 1) out.push_back(d);
  return out;
}

AbelianInvariants quotient_invariants(const HowellBasis& a,
                                      const HowellBasis& b) {
  if (a.n != b.n || a.cols != b.cols)
    throw BadParameter("quotient_invariants: shape mismatch");
  std::uint64_t n = a.n;
  if (n == 1 || a.rows.empty()) {
    if (!b.rows.empty() && !a.contains_span(b))
      throw NotContained("quotient_invariants: B not inside A");
    return {};
  }
  std::size_t z = a.rows.size();
  ModMatrix am(n, a.cols);
  for (const auto& r : a.rows) am.rows.push_back(r);

  // relations of the generators: coefficient kernel plus B expressed in A
  HowellBasis rel = kernel(am);
  std::vector<std::vector<long long>> m;
  for (const ModRow& r : rel.rows)
    m.emplace_back(r.begin(), r.end());
  for (const ModRow& brow : b.rows) {
    auto cf = solve(am, brow);
    if (!cf) throw NotContained("quotient_invariants: B not inside A");
    m.emplace_back(cf->begin(), cf->end());
  }
  for (std::size_t i = 0; i < z; ++i) {
    std::vector<long long> row(z, 0);
    row[i] = static_cast<long long>(n);
    m.push_back(std::move(row));
  }
  AbelianInvariants inv;
  inv.factors = smith_invariants(std::move(m), z);
  return inv;
}

}  // namespace knot
