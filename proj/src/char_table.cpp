#include "hyperoct/char_table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hyperoct/errors.hpp"

namespace hyperoct {

namespace {

SignedCycleType ct(std::vector<int> pos, std::vector<int> neg) {
    return {std::move(pos), std::move(neg)};
}

Bipartition bp(std::vector<int> a, std::vector<int> b) {
    return {Partition(std::move(a)), Partition(std::move(b))};
}

CharacterTable b2_table() {
    CharacterTable t;
    t.n = 2;
    t.classes = {
        {ct({1, 1}, {}), 1}, {ct({}, {1, 1}), 1}, {ct({1}, {1}), 2},
        {ct({2}, {}), 2},    {ct({}, {2}), 2},
    };
    t.irreps = {
        {bp({2}, {}), {1, 1, 1, 1, 1}},     {bp({1, 1}, {}), {1, 1, 1, -1, -1}},
        {bp({}, {2}), {1, 1, -1, 1, -1}},   {bp({}, {1, 1}), {1, 1, -1, -1, 1}},
        {bp({1}, {1}), {2, -2, 0, 0, 0}},
    };
    return t;
}

CharacterTable b3_table() {
    CharacterTable t;
    t.n = 3;
    t.classes = {
        {ct({1, 1, 1}, {}), 1}, {ct({1, 1}, {1}), 3}, {ct({1}, {1, 1}), 3},
        {ct({}, {1, 1, 1}), 1}, {ct({2, 1}, {}), 6},  {ct({2}, {1}), 6},
        {ct({1}, {2}), 6},      {ct({}, {2, 1}), 6},  {ct({3}, {}), 8},
        {ct({}, {3}), 8},
    };
    t.irreps = {
        {bp({3}, {}), {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {bp({2, 1}, {}), {2, 2, 2, 2, 0, 0, 0, 0, -1, -1}},
        {bp({1, 1, 1}, {}), {1, 1, 1, 1, -1, -1, -1, -1, 1, 1}},
        {bp({2}, {1}), {3, 1, -1, -3, 1, -1, 1, -1, 0, 0}},
        {bp({1, 1}, {1}), {3, 1, -1, -3, -1, 1, -1, 1, 0, 0}},
        {bp({1}, {2}), {3, -1, -1, 3, 1, 1, -1, -1, 0, 0}},
        {bp({1}, {1, 1}), {3, -1, -1, 3, -1, -1, 1, 1, 0, 0}},
        {bp({}, {3}), {1, -1, 1, -1, 1, -1, -1, 1, 1, -1}},
        {bp({}, {2, 1}), {2, -2, 2, -2, 0, 0, 0, 0, -1, 1}},
        {bp({}, {1, 1, 1}), {1, -1, 1, -1, -1, 1, 1, -1, 1, -1}},
    };
    return t;
}

}  // namespace

BigInt CharacterTable::group_order() const {
    BigInt total = 0;
    for (const auto& [type, size] : classes) total += size;
    return total;
}

const std::vector<long long>& CharacterTable::row(const Bipartition& b) const {
    for (const auto& [label, values] : irreps)
        if (label == b) return values;
    throw std::out_of_range("CharacterTable: unknown irrep " + b.to_string());
}

ClassFunction CharacterTable::row_class_function(const Bipartition& b) const {
    const auto& values = row(b);
    ClassFunction f;
    for (size_t k = 0; k < classes.size(); ++k) f[classes[k].first] = values[k];
    return f;
}

CharacterTable load_table(int n) {
    if (n == 2) return b2_table();
    if (n == 3) return b3_table();
    throw unsupported_error("load_table: only B_2 and B_3 are tabulated");
}

OrthogonalityReport orthogonality_check(const CharacterTable& t) {
    OrthogonalityReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.pass = false;
        rep.failures.push_back(msg);
    };
    BigInt order = int_pow(2, t.n) * factorial(t.n);
    if (t.group_order() != order) fail("class sizes do not sum to |B_N|");
    if (t.classes.size() != t.irreps.size()) fail("class/irrep count mismatch");

    size_t k = t.classes.size();
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        for (size_t j = i; j < t.irreps.size(); ++j) {
            BigInt ip = 0;
            for (size_t c = 0; c < k; ++c)
                ip += t.classes[c].second * t.irreps[i].second[c] * t.irreps[j].second[c];
            BigInt want = i == j ? order : BigInt(0);
            if (ip != want)
                fail("row inner product (" + t.irreps[i].first.to_string() + ", " +
                     t.irreps[j].first.to_string() + ") = " + ip.str());
        }
    }
    for (size_t c = 0; c < k; ++c) {
        for (size_t d = c; d < k; ++d) {
            BigInt ip = 0;
            for (const auto& [label, values] : t.irreps) ip += BigInt(values[c]) * values[d];
            BigInt want = c == d ? exact_div(order, t.classes[c].second) : BigInt(0);
            if (ip != want)
                fail("column relation (" + t.classes[c].first.to_string() + ", " +
                     t.classes[d].first.to_string() + ") = " + ip.str());
        }
    }
    BigInt burnside = 0;
    for (const auto& [label, values] : t.irreps) burnside += BigInt(values[0]) * values[0];
    if (burnside != order) fail("Burnside sum of dim^2 = " + burnside.str());
    return rep;
}

MultiplicityVector decompose_power(int n, int t) {
    CharacterTable table = load_table(n);
    if (t < 0) throw std::invalid_argument("decompose_power: t < 0");
    const auto& chi_v_row = table.row(natural_bipartition(n));
    BigInt order = table.group_order();
    MultiplicityVector mv;
    mv.n = n;
    mv.t = t;
    for (const auto& [label, values] : table.irreps) {
        BigInt ip = 0;
        for (size_t c = 0; c < table.classes.size(); ++c)
            ip += table.classes[c].second *
                  int_pow(chi_v_row[c], static_cast<unsigned>(t)) * values[c];
        BigInt mult = exact_div(ip, order);
        if (mult < 0) throw std::logic_error("decompose_power: negative multiplicity");
        if (mult != 0) mv.entries[label] = mult;
    }
    return mv;
}

Rational inner_product_brute(int n, int t, const ClassFunction& target) {
    if (n > 6) throw capacity_error("inner_product_brute: whole-group sum too large for N > 6");
    if (t < 0) throw std::invalid_argument("inner_product_brute: t < 0");
    BigInt sum = 0;
    for (const auto& g : enumerate_group(n)) {
        long long tv = target.at(signed_cycle_type(g));
        sum += int_pow(chi_v(g), static_cast<unsigned>(t)) * tv;
    }
    return Rational(sum, int_pow(2, n) * factorial(n));
}

ClassFunction sgn_class_function(int n) {
    ClassFunction f;
    for (const auto& type : all_signed_cycle_types(n)) f[type] = class_permutation_sign(type);
    return f;
}

ClassFunction trivial_class_function(int n) {
    ClassFunction f;
    for (const auto& type : all_signed_cycle_types(n)) f[type] = 1;
    return f;
}

std::string pretty_table(const CharacterTable& t) {
    std::vector<size_t> widths;
    std::vector<std::string> headers;
    for (const auto& [type, size] : t.classes) headers.push_back(type.to_string());

    size_t label_width = 5;
    for (const auto& [label, values] : t.irreps)
        label_width = std::max(label_width, label.to_string().size());
    for (const auto& h : headers) widths.push_back(std::max<size_t>(h.size(), 4));

    std::ostringstream out;
    auto pad = [&out](const std::string& s, size_t w) {
        out << s;
        for (size_t i = s.size(); i < w + 2; ++i) out << ' ';
    };
    pad("class", label_width);
    for (size_t c = 0; c < headers.size(); ++c) pad(headers[c], widths[c]);
    out << '\n';
    pad("size", label_width);
    for (size_t c = 0; c < t.classes.size(); ++c) pad(t.classes[c].second.str(), widths[c]);
    out << '\n';
    for (const auto& [label, values] : t.irreps) {
        pad(label.to_string(), label_width);
        for (size_t c = 0; c < values.size(); ++c) pad(std::to_string(values[c]), widths[c]);
        out << '\n';
    }
    return out.str();
}

}  // namespace hyperoct
