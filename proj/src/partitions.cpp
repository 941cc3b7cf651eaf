#include "artinsym/partitions.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace artinsym {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& s)
{
    std::vector<int> parts;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            parts.push_back(std::stoi(cur));
            cur.clear();
        }
    };
    for (char ch : s) {
        if (ch >= '0' && ch <= '9')
            cur += ch;
        else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '[' || ch == ']')
            flush();
        else
            throw std::invalid_argument("cannot parse partition '" + s + "'");
    }
    flush();
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::multiplicities() const
{
    std::vector<int> m(parts_.empty() ? 1 : parts_[0] + 1, 0);
    for (int x : parts_)
        ++m[x];
    return m;
}

Partition Partition::conjugate() const
{
    std::vector<int> c;
    int l = length();
    for (int j = 1; l > 0 && j <= parts_[0]; ++j) {
        while (l > 0 && parts_[l - 1] < j)
            --l;
        c.push_back(l);
    }
    return Partition(std::move(c));
}

Partition Partition::scaled(int f) const
{
    std::vector<int> p = parts_;
    for (int& x : p)
        x *= f;
    return Partition(std::move(p));
}

std::string Partition::str() const
{
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
    if (auto c = a.size_ <=> b.size_; c != 0)
        return c;
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                  a.parts_.begin(), a.parts_.end());
}

Partition merge(const Partition& a, const Partition& b)
{
    std::vector<int> p = a.parts();
    p.insert(p.end(), b.parts().begin(), b.parts().end());
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

namespace {

void gen_partitions(int remaining, int max_part, int max_length, std::vector<int>& cur,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_length == 0)
        return;
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(remaining - k, k, max_length - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int m, int max_length)
{
    if (m < 0)
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(m, m, max_length < 0 ? m + 1 : max_length, cur, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int m)
{
    return enumerate_partitions(m, -1);
}

const std::vector<Partition>& partitions_of(int m)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<Partition>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[m];
    if (!slot)
        slot = std::make_unique<std::vector<Partition>>(enumerate_partitions(m));
    return *slot;
}

int partition_index(const Partition& p)
{
    const auto& all = partitions_of(p.size());
    auto it = std::lower_bound(all.begin(), all.end(), p);
    return static_cast<int>(it - all.begin());
}

long partition_count(int m)
{
    if (m < 0)
        return 0;
    std::vector<long> c(m + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= m; ++k)
        for (int j = k; j <= m; ++j)
            c[j] += c[j - k];
    return c[m];
}

int n_stat(const Partition& p)
{
    int s = 0;
    for (int i = 0; i < p.length(); ++i)
        s += i * p[i];
    return s;
}

bool dominates(const Partition& a, const Partition& b)
{
    if (a.size() != b.size())
        return false;
    int sa = 0, sb = 0;
    for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb)
            return false;
    }
    return true;
}

Integer z_integer(const Partition& p)
{
    Integer z = 1;
    auto m = p.multiplicities();
    for (int i = 1; i < static_cast<int>(m.size()); ++i) {
        if (m[i] == 0)
            continue;
        Integer ip;
        mpz_ui_pow_ui(ip.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m[i]));
        z *= factorial(m[i]) * ip;
    }
    return z;
}

int epsilon_sign(const Partition& p)
{
    return ((p.size() - p.length()) % 2 == 0) ? 1 : -1;
}

UniPoly b_poly(const Partition& p)
{
    UniPoly b(1);
    auto m = p.multiplicities();
    for (int i = 1; i < static_cast<int>(m.size()); ++i)
        for (int k = 1; k <= m[i]; ++k)
            b *= UniPoly::one_minus_power(k);
    return b;
}

UniPoly v_poly(int m)
{
    UniPoly v(1);
    for (int i = 1; i <= m; ++i) {
        /* (1 - t^i)/(1 - t) = 1 + t + ... + t^(i-1) */
        std::vector<Rational> c(i, Rational(1));
        v *= UniPoly(std::move(c));
    }
    return v;
}

UniPoly v_lambda_n(const Partition& p, int n)
{
    if (p.length() > n)
        throw LengthError("partition " + p.str() + " longer than " + std::to_string(n));
    UniPoly v = v_poly(n - p.length());
    auto m = p.multiplicities();
    for (int i = 1; i < static_cast<int>(m.size()); ++i)
        v *= v_poly(m[i]);
    return v;
}

/* ---------------------------------------------------------------- Tableau */

bool Tableau::is_semistandard() const
{
    if (static_cast<int>(rows.size()) != shape.length())
        return false;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape[static_cast<int>(r)])
            return false;
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] < 1)
                return false;
            if (c > 0 && rows[r][c] < rows[r][c - 1])
                return false;
            if (r > 0 && rows[r][c] <= rows[r - 1][c])
                return false;
        }
    }
    return true;
}

std::vector<int> Tableau::content() const
{
    std::vector<int> c;
    for (const auto& row : rows)
        for (int x : row) {
            if (x > static_cast<int>(c.size()))
                c.resize(x, 0);
            ++c[x - 1];
        }
    return c;
}

std::vector<int> Tableau::row_reading_word() const
{
    std::vector<int> w;
    for (size_t r = rows.size(); r-- > 0;)
        w.insert(w.end(), rows[r].begin(), rows[r].end());
    return w;
}

std::vector<int> Tableau::column_reading_word() const
{
    std::vector<int> w;
    for (int c = 0; c < shape[0]; ++c)
        for (size_t r = rows.size(); r-- > 0;)
            if (c < static_cast<int>(rows[r].size()))
                w.push_back(rows[r][c]);
    return w;
}

std::string Tableau::str() const
{
    std::ostringstream os;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r)
            os << "/";
        for (size_t c = 0; c < rows[r].size(); ++c)
            os << (c ? " " : "") << rows[r][c];
    }
    return os.str();
}

namespace {

/* fill entries 1..k as successive horizontal strips inside the shape */
template <class Visit>
void horizontal_strips(const Partition& shape, const std::vector<int>& content, size_t letter,
                       std::vector<int>& cur, std::vector<std::vector<int>>& history, Visit&& visit)
{
    if (letter == content.size()) {
        for (int i = 0; i < shape.length(); ++i)
            if (cur[i] != shape[i])
                return;
        visit(history);
        return;
    }
    int need = content[letter];
    int rows = shape.length();
    std::vector<int> next = cur;
    /* choose next[i] in [cur[i], min(shape[i], cur[i-1])] with total growth = need */
    std::vector<int> suffix_cap(rows + 1, 0);
    for (int i = rows - 1; i >= 0; --i) {
        int cap = std::min(shape[i], i == 0 ? shape[0] : cur[i - 1]) - cur[i];
        suffix_cap[i] = suffix_cap[i + 1] + std::max(cap, 0);
    }
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == rows) {
            if (left == 0) {
                history.push_back(next);
                horizontal_strips(shape, content, letter + 1, next, history, visit);
                history.pop_back();
            }
            return;
        }
        if (suffix_cap[i] < left)
            return;
        int cap = std::min(shape[i], i == 0 ? shape[0] : cur[i - 1]) - cur[i];
        for (int g = std::min(cap, left); g >= 0; --g) {
            next[i] = cur[i] + g;
            self(self, i + 1, left - g);
        }
        next[i] = cur[i];
    };
    rec(rec, 0, need);
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content)
{
    if (shape.size() != content.size())
        throw std::invalid_argument("shape and content sizes differ");
    std::vector<Tableau> out;
    std::vector<int> cur(shape.length(), 0);
    std::vector<std::vector<int>> history;
    horizontal_strips(shape, content.parts(), 0, cur, history,
                      [&](const std::vector<std::vector<int>>& h) {
                          Tableau t;
                          t.shape = shape;
                          t.rows.resize(shape.length());
                          std::vector<int> prev(shape.length(), 0);
                          for (size_t letter = 0; letter < h.size(); ++letter) {
                              for (int r = 0; r < shape.length(); ++r)
                                  for (int c = prev[r]; c < h[letter][r]; ++c)
                                      t.rows[r].push_back(static_cast<int>(letter) + 1);
                              prev = h[letter];
                          }
                          out.push_back(std::move(t));
                      });
    return out;
}

long count_ssyt(const Partition& shape, const std::vector<int>& content)
{
    int total = 0;
    for (int c : content)
        total += c;
    if (total != shape.size())
        return 0;
    long count = 0;
    std::vector<int> cur(shape.length(), 0);
    std::vector<std::vector<int>> history;
    horizontal_strips(shape, content, 0, cur, history,
                      [&](const std::vector<std::vector<int>>&) { ++count; });
    return count;
}

namespace {

void check_partition_content(const std::vector<int>& word)
{
    std::vector<int> c;
    for (int x : word) {
        if (x < 1)
            throw std::invalid_argument("word letters must be positive");
        if (x > static_cast<int>(c.size()))
            c.resize(x, 0);
        ++c[x - 1];
    }
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] > c[i - 1])
            throw std::invalid_argument("word content is not a partition");
}

/* standard subword extraction; returns (charge, cocharge) */
std::pair<int, int> charge_pair(const std::vector<int>& w)
{
    check_partition_content(w);
    int n = static_cast<int>(w.size());
    std::vector<char> used(n, 0);
    int remaining = n;
    int ch = 0, coch = 0;
    while (remaining > 0) {
        int top = 0;
        for (int i = 0; i < n; ++i)
            if (!used[i])
                top = std::max(top, w[i]);
        int pos = -1;
        for (int i = n - 1; i >= 0; --i)
            if (!used[i] && w[i] == 1) {
                pos = i;
                break;
            }
        used[pos] = 1;
        --remaining;
        int up = 0, down = 0;
        for (int letter = 2; letter <= top; ++letter) {
            int found = -1;
            bool wrapped = false;
            for (int i = pos - 1; i >= 0; --i)
                if (!used[i] && w[i] == letter) {
                    found = i;
                    break;
                }
            if (found < 0) {
                for (int i = n - 1; i > pos; --i)
                    if (!used[i] && w[i] == letter) {
                        found = i;
                        wrapped = true;
                        break;
                    }
            }
            if (wrapped)
                ++up;
            else
                ++down;
            ch += up;
            coch += down;
            used[found] = 1;
            --remaining;
            pos = found;
        }
    }
    return {ch, coch};
}

int n_of_content(const std::vector<int>& c)
{
    int s = 0;
    for (size_t i = 0; i < c.size(); ++i)
        s += static_cast<int>(i) * c[i];
    return s;
}

}  // namespace

int charge(const std::vector<int>& word)
{
    return charge_pair(word).first;
}

int cocharge(const Tableau& t)
{
    if (!t.is_semistandard())
        throw std::invalid_argument("cocharge needs a semistandard tableau");
    auto w = t.row_reading_word();
    std::vector<int> c = t.content();
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] > c[i - 1])
            throw std::invalid_argument("tableau content is not a partition");
    return n_of_content(c) - charge(w);
}

int cocharge_direct(const Tableau& t)
{
    if (!t.is_semistandard())
        throw std::invalid_argument("cocharge needs a semistandard tableau");
    return charge_pair(t.column_reading_word()).second;
}

UniPoly kostka_foulkes_tilde(const Partition& mu, const Partition& lambda)
{
    if (mu.size() != lambda.size())
        return UniPoly();
    static std::mutex mu_lock;
    static std::map<std::pair<Partition, Partition>, UniPoly> cache;
    auto key = std::make_pair(mu, lambda);
    {
        std::lock_guard<std::mutex> lock(mu_lock);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    std::vector<Rational> c;
    for (const auto& t : enumerate_ssyt(mu, lambda)) {
        int k = cocharge(t);
        if (k >= static_cast<int>(c.size()))
            c.resize(k + 1, Rational(0));
        c[k] += 1;
    }
    UniPoly r(std::move(c));
    std::lock_guard<std::mutex> lock(mu_lock);
    cache.emplace(key, r);
    return r;
}

void prefill_kostka_foulkes(int max_degree)
{
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& mu : partitions_of(d))
            for (const auto& la : partitions_of(d))
                kostka_foulkes_tilde(mu, la);
}

/* ------------------------------------------------------- MultiPartition */

std::string PrimeKey::label() const
{
    if (rational)
        return std::to_string(p);
    return std::to_string(p) + "." + std::to_string(index);
}

MultiPartition::MultiPartition(std::vector<Entry> entries)
{
    for (auto& e : entries)
        if (!e.second.empty())
            entries_.push_back(std::move(e));
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i].first == entries_[i - 1].first)
            throw std::invalid_argument("duplicate prime in multipartition");
}

Partition MultiPartition::at(const PrimeKey& q) const
{
    for (const auto& e : entries_)
        if (e.first == q)
            return e.second;
    return Partition();
}

void MultiPartition::set(const PrimeKey& q, const Partition& p)
{
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].first == q) {
            if (p.empty())
                entries_.erase(entries_.begin() + static_cast<long>(i));
            else
                entries_[i].second = p;
            return;
        }
    if (p.empty())
        return;
    entries_.emplace_back(q, p);
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
}

std::uint64_t checked_pow(std::uint64_t base, int e, std::uint64_t cap)
{
    unsigned __int128 r = 1;
    for (int i = 0; i < e; ++i) {
        r *= base;
        if (r > cap)
            return cap + (cap < UINT64_MAX ? 1 : 0);
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t MultiPartition::norm() const
{
    unsigned __int128 r = 1;
    for (const auto& [q, p] : entries_)
        for (int i = 0; i < p.size(); ++i) {
            r *= q.norm;
            if (r > UINT64_MAX)
                throw std::overflow_error("multipartition norm overflows 64 bits");
        }
    return static_cast<std::uint64_t>(r);
}

int MultiPartition::length() const
{
    int l = 0;
    for (const auto& e : entries_)
        l = std::max(l, e.second.length());
    return l;
}

std::string MultiPartition::str() const
{
    std::string s = "{";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ",";
        s += entries_[i].first.label() + ":" + entries_[i].second.str();
    }
    return s + "}";
}

std::string MultiPartition::json() const
{
    std::string s = "[";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ",";
        s += "{\"prime\":\"" + entries_[i].first.label() + "\",\"norm\":" +
             std::to_string(entries_[i].first.norm) + ",\"parts\":[";
        const auto& parts = entries_[i].second.parts();
        for (size_t j = 0; j < parts.size(); ++j)
            s += (j ? "," : "") + std::to_string(parts[j]);
        s += "]}";
    }
    return s + "]";
}

std::strong_ordering operator<=>(const MultiPartition& a, const MultiPartition& b)
{
    if (auto c = a.norm() <=> b.norm(); c != 0)
        return c;
    size_t n = std::min(a.entries_.size(), b.entries_.size());
    for (size_t i = 0; i < n; ++i) {
        if (auto c = a.entries_[i].first <=> b.entries_[i].first; c != 0)
            return c;
        if (auto c = a.entries_[i].second <=> b.entries_[i].second; c != 0)
            return c;
    }
    return a.entries_.size() <=> b.entries_.size();
}

int max_local_degree(std::uint64_t norm, std::uint64_t bound)
{
    if (norm < 2)
        throw std::invalid_argument("prime norm must be at least 2");
    int k = 0;
    unsigned __int128 r = norm;
    while (r <= bound) {
        ++k;
        r *= norm;
    }
    return k;
}

std::vector<MultiPartition> enumerate_multipartitions(std::vector<PrimeKey> primes,
                                                      std::uint64_t norm_bound, int max_length)
{
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const auto& q : primes)
        if (q.norm < 2)
            throw std::invalid_argument("prime norms must be at least 2");
    std::vector<MultiPartition> out;
    std::vector<MultiPartition::Entry> cur;
    auto rec = [&](auto&& self, size_t start, std::uint64_t n) -> void {
        out.emplace_back(cur);
        for (size_t i = start; i < primes.size(); ++i) {
            if (n * primes[i].norm > norm_bound)
                break;
            std::uint64_t m = n;
            for (int k = 1;; ++k) {
                if (m > norm_bound / primes[i].norm)
                    break;
                m *= primes[i].norm;
                for (const auto& p : enumerate_partitions(k, max_length)) {
                    cur.emplace_back(primes[i], p);
                    self(self, i + 1, m);
                    cur.pop_back();
                }
            }
        }
    };
    if (norm_bound >= 1)
        rec(rec, 0, 1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace artinsym
