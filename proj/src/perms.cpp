#include "paratopia/perms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace paratopia {

long long lcm2(long long a, long long b) {
    return a / std::gcd(a, b) * b;
}

Permutation::Permutation(int degree) {
    if (degree < 0) throw std::invalid_argument("negative permutation degree");
    img_.resize(degree);
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = (int)images.size();
    std::vector<char> seen(n + 1, 0);
    for (int v : images) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("image table is not a bijection of {1..n}");
        seen[v] = 1;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p(degree);
    std::vector<char> seen(degree + 1, 0);
    for (const auto& cyc : cycles) {
        for (size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
            if (a < 1 || a > degree) throw std::invalid_argument("cycle point out of range");
            if (seen[a]) throw std::invalid_argument("point repeated across cycles");
            seen[a] = 1;
            p.img_[a - 1] = b;
        }
    }
    return p;
}

Permutation Permutation::parse(const std::string& text, int degree_hint) {
    std::string s = text;
    if (s.find('(') != std::string::npos) {
        std::vector<std::vector<int>> cycles;
        int maxpt = 0;
        size_t i = 0;
        while (i < s.size()) {
            if (std::isspace((unsigned char)s[i])) { ++i; continue; }
            if (s[i] != '(') throw std::invalid_argument("bad cycle form: expected '('");
            size_t close = s.find(')', i);
            if (close == std::string::npos) throw std::invalid_argument("bad cycle form: unbalanced '('");
            std::istringstream in(s.substr(i + 1, close - i - 1));
            std::vector<int> cyc;
            std::string tok;
            while (in >> tok) {
                // allow comma separated points as well
                for (auto& ch : tok) if (ch == ',') ch = ' ';
                std::istringstream in2(tok);
                int v;
                while (in2 >> v) {
                    cyc.push_back(v);
                    maxpt = std::max(maxpt, v);
                }
            }
            if (cyc.empty()) throw std::invalid_argument("bad cycle form: empty cycle");
            cycles.push_back(std::move(cyc));
            i = close + 1;
        }
        return from_cycles(std::max(maxpt, degree_hint), cycles);
    }
    std::istringstream in(s);
    std::vector<int> images;
    int v;
    while (in >> v) images.push_back(v);
    if (!in.eof()) throw std::invalid_argument("bad image list");
    if (images.empty()) throw std::invalid_argument("empty permutation text");
    return from_images(std::move(images));
}

Permutation Permutation::operator*(const Permutation& q) const {
    if (degree() != q.degree()) throw std::invalid_argument("degree mismatch in composition");
    Permutation r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[i] = q.img_[img_[i] - 1];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i] - 1] = i + 1;
    return r;
}

Permutation Permutation::power(long long k) const {
    const long long ord = order();
    k %= ord;
    if (k < 0) k += ord;
    Permutation acc(degree()), base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree() + 1, 0);
    for (int i = 1; i <= degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            seen[j] = 1;
            cyc.push_back(j);
            j = (*this)[j];
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out;
}

CycleStructure Permutation::cycle_structure() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back((int)c.size());
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    std::vector<CycleStructure::Part> parts;
    for (int l : lens) {
        if (!parts.empty() && parts.back().length == l)
            parts.back().multiplicity++;
        else
            parts.push_back({l, 1});
    }
    return CycleStructure(std::move(parts));
}

int Permutation::cycle_length_of(int i) const {
    if (i < 1 || i > degree()) throw std::out_of_range("point out of range");
    int len = 0, j = i;
    do {
        j = (*this)[j];
        ++len;
    } while (j != i);
    return len;
}

long long Permutation::order() const {
    long long o = 1;
    for (const auto& c : cycles()) o = lcm2(o, (long long)c.size());
    return o;
}

int Permutation::fixed_point_count() const {
    int f = 0;
    for (int i = 1; i <= degree(); ++i)
        if ((*this)[i] == i) ++f;
    return f;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if ((*this)[i] != i) return false;
    return true;
}

std::string Permutation::image_str() const {
    std::ostringstream out;
    for (int i = 1; i <= degree(); ++i) {
        if (i > 1) out << ' ';
        out << (*this)[i];
    }
    return out.str();
}

std::string Permutation::cycle_str() const {
    std::ostringstream out;
    for (const auto& c : cycles()) {
        out << '(';
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) out << ' ';
            out << c[k];
        }
        out << ')';
    }
    return out.str();
}

CycleStructure::CycleStructure(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k].length < 1 || parts_[k].multiplicity < 1)
            throw std::invalid_argument("cycle structure parts must be positive");
        if (k > 0 && parts_[k - 1].length <= parts_[k].length)
            throw std::invalid_argument("cycle structure lengths must be strictly decreasing");
    }
}

CycleStructure CycleStructure::parse(const std::string& text) {
    std::vector<Part> parts;
    std::string term;
    std::istringstream in(text);
    bool any = false;
    while (std::getline(in, term, '.')) {
        any = true;
        size_t caret = term.find('^');
        int len = 0, mult = 1;
        try {
            if (caret == std::string::npos) {
                len = std::stoi(term);
            } else {
                len = std::stoi(term.substr(0, caret));
                mult = std::stoi(term.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad cycle structure term '" + term + "'");
        }
        parts.push_back({len, mult});
    }
    if (!any) throw std::invalid_argument("empty cycle structure");
    return CycleStructure(std::move(parts));  // ordering validated there
}

int CycleStructure::degree() const {
    int n = 0;
    for (const auto& p : parts_) n += p.length * p.multiplicity;
    return n;
}

int CycleStructure::multiplicity_of(int length) const {
    for (const auto& p : parts_)
        if (p.length == length) return p.multiplicity;
    return 0;
}

int CycleStructure::cycle_count() const {
    int c = 0;
    for (const auto& p : parts_) c += p.multiplicity;
    return c;
}

long long CycleStructure::order() const {
    long long o = 1;
    for (const auto& p : parts_) o = lcm2(o, p.length);
    return o;
}

std::vector<int> CycleStructure::expanded() const {
    std::vector<int> out;
    for (const auto& p : parts_)
        for (int k = 0; k < p.multiplicity; ++k) out.push_back(p.length);
    return out;
}

std::string CycleStructure::str() const {
    std::ostringstream out;
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (k) out << '.';
        out << parts_[k].length;
        if (parts_[k].multiplicity > 1) out << '^' << parts_[k].multiplicity;
    }
    return out.str();
}

Permutation canonical_permutation(const CycleStructure& cs) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int len : cs.expanded()) {
        std::vector<int> cyc(len);
        std::iota(cyc.begin(), cyc.end(), next);
        next += len;
        cycles.push_back(std::move(cyc));
    }
    return Permutation::from_cycles(cs.degree(), cycles);
}

std::vector<CycleStructure> partitions(int n) {
    if (n < 1) throw std::invalid_argument("partitions of n require n >= 1");
    std::vector<CycleStructure> out;
    std::vector<int> cur;
    // depth-first with parts chosen largest-first yields descending-lex order
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            std::vector<CycleStructure::Part> parts;
            for (int l : cur) {
                if (!parts.empty() && parts.back().length == l)
                    parts.back().multiplicity++;
                else
                    parts.push_back({l, 1});
            }
            out.push_back(CycleStructure(std::move(parts)));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace paratopia
