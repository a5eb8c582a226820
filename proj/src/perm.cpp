#include "icosa/perm.hpp"

#include "icosa/errors.hpp"

#include <algorithm>
#include <sstream>

namespace icosa {

namespace {
constexpr int kMaxDegree = 7;
}

Perm::Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    if (degree() > kMaxDegree)
        throw InputError("permutation degree capped at 7");
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
        if (v >= img_.size() || seen[v])
            throw InputError("image sequence is not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<std::uint8_t> img(degree);
    for (int i = 0; i < degree; ++i)
        img[i] = static_cast<std::uint8_t>(i);
    return Perm(std::move(img));
}

Perm Perm::parse(const std::string& s, int degree) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> current;
    bool in_cycle = false;
    int max_point = degree;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        if (c == '(') {
            if (in_cycle)
                throw InputError("nested '(' in cycle notation: " + s);
            in_cycle = true;
            current.clear();
            ++i;
        } else if (c == ')') {
            if (!in_cycle)
                throw InputError("unmatched ')' in cycle notation: " + s);
            in_cycle = false;
            if (!current.empty())
                cycles.push_back(current);
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (!in_cycle)
                throw InputError("point outside cycle in: " + s);
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            int p = std::stoi(s.substr(i, j - i));
            if (p < 1 || p > kMaxDegree)
                throw InputError("point out of range in: " + s);
            current.push_back(p);
            max_point = std::max(max_point, p);
            i = j;
        } else {
            throw InputError("unexpected character in cycle notation: " + s);
        }
    }
    if (in_cycle)
        throw InputError("unterminated cycle in: " + s);
    if (max_point == 0)
        max_point = 1;
    std::vector<std::uint8_t> img(max_point);
    for (int p = 0; p < max_point; ++p)
        img[p] = static_cast<std::uint8_t>(p);
    std::vector<bool> moved(max_point, false);
    for (const auto& cyc : cycles) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k] - 1;
            int to = cyc[(k + 1) % cyc.size()] - 1;
            if (moved[from])
                throw InputError("point repeated across cycles in: " + s);
            moved[from] = true;
            img[from] = static_cast<std::uint8_t>(to);
        }
    }
    return Perm(std::move(img));
}

Perm Perm::compose(const Perm& other) const {
    if (degree() != other.degree())
        throw InputError("composing permutations of different degrees");
    std::vector<std::uint8_t> img(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
        img[x] = img_[other.img_[x]];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<std::uint8_t> img(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
        img[img_[x]] = static_cast<std::uint8_t>(x);
    return Perm(std::move(img));
}

Perm Perm::conjugated_by(const Perm& h) const {
    return h.compose(*this).compose(h.inverse());
}

int Perm::order() const {
    Perm p = *this;
    int n = 1;
    while (!p.is_identity()) {
        p = p.compose(*this);
        ++n;
    }
    return n;
}

bool Perm::is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != x)
            return false;
    return true;
}

Perm Perm::extended(int degree) const {
    if (degree < this->degree())
        throw InputError("cannot shrink a permutation");
    std::vector<std::uint8_t> img(img_.begin(), img_.end());
    for (int i = this->degree(); i < degree; ++i)
        img.push_back(static_cast<std::uint8_t>(i));
    return Perm(std::move(img));
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t start = 0; start < img_.size(); ++start) {
        if (seen[start] || img_[start] == start)
            continue;
        std::vector<int> cyc;
        std::size_t x = start;
        while (!seen[x]) {
            seen[x] = true;
            cyc.push_back(static_cast<int>(x));
            x = img_[x];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Perm::str() const {
    auto cyc = cycles();
    if (cyc.empty())
        return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
        os << "(";
        for (std::size_t k = 0; k < c.size(); ++k)
            os << (k ? " " : "") << c[k] + 1;
        os << ")";
    }
    return os.str();
}

bool cycle_order_less(const Perm& a, const Perm& b) {
    auto ca = a.cycles(), cb = b.cycles();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

} // namespace icosa
