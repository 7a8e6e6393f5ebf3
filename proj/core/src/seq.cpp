#include "compseq/seq.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace compseq {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

void require_even(const Seq& a, const char* op) {
    if (a.size() % 2 != 0)
        throw DomainError(std::string(op) + " requires an even-length sequence, got length " +
                          std::to_string(a.size()));
}

void require_equal_lengths(const Seq& a, const Seq& b, const char* op) {
    if (a.size() != b.size())
        throw DomainError(std::string(op) + " requires equal lengths, got " +
                          std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

// Parses one token of the sequence grammar.
GaussInt parse_token(std::string_view tok) {
    if (tok == "+") return kOne;
    if (tok == "-") return kMinusOne;
    if (tok == "0") return kZero;
    if (tok == "+j" || tok == "j" || tok == "+i" || tok == "i") return kImag;
    if (tok == "-j" || tok == "-i") return kMinusImag;

    // General form: [+-]?int ( [+-] int? [ij] )?  e.g. "2", "-3", "1+2i", "-1-i", "2i"
    const char* begin = tok.data();
    const char* end = tok.data() + tok.size();
    auto parse_int = [&](const char*& p) -> std::optional<std::int64_t> {
        std::int64_t sign = 1;
        const char* q = p;
        if (q != end && (*q == '+' || *q == '-')) {
            if (*q == '-') sign = -1;
            ++q;
        }
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(q, end, v);
        if (ec != std::errc{} || ptr == q) return std::nullopt;
        p = ptr;
        return sign * v;
    };

    const char* p = begin;
    auto first = parse_int(p);
    if (!first) throw DomainError("bad sequence token '" + std::string(tok) + "'");
    if (p == end) return {*first, 0};
    if (*p == 'i' || *p == 'j') {
        if (p + 1 == end) return {0, *first};
        throw DomainError("bad sequence token '" + std::string(tok) + "'");
    }
    // imaginary part follows; its sign character is mandatory
    const char* q = p;
    auto second = parse_int(q);
    std::int64_t im;
    if (second) {
        im = *second;
    } else if (*p == '+' && p + 1 != end && (p[1] == 'i' || p[1] == 'j')) {
        im = 1;
        q = p + 1;
    } else if (*p == '-' && p + 1 != end && (p[1] == 'i' || p[1] == 'j')) {
        im = -1;
        q = p + 1;
    } else {
        throw DomainError("bad sequence token '" + std::string(tok) + "'");
    }
    if (q + 1 == end && (*q == 'i' || *q == 'j')) return {*first, im};
    throw DomainError("bad sequence token '" + std::string(tok) + "'");
}

}  // namespace

const char* to_string(Alphabet a) {
    switch (a) {
        case Alphabet::Binary: return "binary";
        case Alphabet::Ternary: return "ternary";
        case Alphabet::Quad: return "quad";
        case Alphabet::Gauss: return "gauss";
    }
    return "?";
}

Alphabet alphabet_from_string(std::string_view name) {
    if (name == "binary") return Alphabet::Binary;
    if (name == "ternary") return Alphabet::Ternary;
    if (name == "quad" || name == "quadriphase") return Alphabet::Quad;
    if (name == "gauss" || name == "gaussian") return Alphabet::Gauss;
    throw DomainError("unknown alphabet '" + std::string(name) + "'");
}

bool element_in_alphabet(const GaussInt& z, Alphabet a) {
    switch (a) {
        case Alphabet::Binary: return z == kOne || z == kMinusOne;
        case Alphabet::Ternary: return z == kOne || z == kMinusOne || z == kZero;
        case Alphabet::Quad:
            return z == kOne || z == kMinusOne || z == kImag || z == kMinusImag;
        case Alphabet::Gauss: return true;
    }
    return false;
}

Alphabet join(Alphabet a, Alphabet b) {
    if (a == b) return a;
    if (a == Alphabet::Binary) return b;
    if (b == Alphabet::Binary) return a;
    return Alphabet::Gauss;  // Ternary/Quad/Gauss mix
}

std::vector<GaussInt> alphabet_elements(Alphabet a) {
    switch (a) {
        case Alphabet::Binary: return {kOne, kMinusOne};
        case Alphabet::Ternary: return {kOne, kZero, kMinusOne};
        case Alphabet::Quad: return {kOne, kMinusOne, kImag, kMinusImag};
        case Alphabet::Gauss: break;
    }
    throw DomainError("the unrestricted alphabet cannot be enumerated");
}

Alphabet infer_alphabet(std::span<const GaussInt> elems) {
    bool ternary_ok = true, quad_ok = true;
    bool binary_ok = true;
    for (const auto& z : elems) {
        binary_ok = binary_ok && element_in_alphabet(z, Alphabet::Binary);
        ternary_ok = ternary_ok && element_in_alphabet(z, Alphabet::Ternary);
        quad_ok = quad_ok && element_in_alphabet(z, Alphabet::Quad);
    }
    if (binary_ok) return Alphabet::Binary;
    if (ternary_ok) return Alphabet::Ternary;
    if (quad_ok) return Alphabet::Quad;
    return Alphabet::Gauss;
}

Seq::Seq(std::vector<GaussInt> elems, Alphabet alphabet)
    : elems_(std::move(elems)), alphabet_(alphabet) {
    require(!elems_.empty(), "empty sequence");
    for (const auto& z : elems_)
        if (!element_in_alphabet(z, alphabet_))
            throw DomainError("element " + to_token(z) + " outside alphabet " +
                              to_string(alphabet_));
}

Seq::Seq(std::vector<GaussInt> elems) : elems_(std::move(elems)) {
    require(!elems_.empty(), "empty sequence");
    alphabet_ = infer_alphabet(elems_);
}

Seq Seq::parse(std::string_view text) {
    std::vector<GaussInt> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok.front() == '#') break;
        out.push_back(parse_token(tok));
    }
    require(!out.empty(), "empty sequence");
    return Seq(std::move(out));
}

std::uint64_t Seq::energy() const {
    std::uint64_t e = 0;
    for (const auto& z : elems_) e += z.norm();
    return e;
}

int Seq::zero_count() const {
    return static_cast<int>(std::count_if(elems_.begin(), elems_.end(),
                                          [](const GaussInt& z) { return z.is_zero(); }));
}

bool Seq::is_real() const {
    return std::all_of(elems_.begin(), elems_.end(),
                       [](const GaussInt& z) { return z.is_real(); });
}

Seq Seq::retagged(Alphabet a) const {
    return Seq(elems_, a);
}

std::string Seq::str() const {
    std::string s;
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ' ';
        s += to_token(elems_[i]);
    }
    return s;
}

std::strong_ordering operator<=>(const Seq& a, const Seq& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (int i = 0; i < a.size(); ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

Seq reverse(const Seq& a) {
    std::vector<GaussInt> v(a.elems().rbegin(), a.elems().rend());
    return Seq(std::move(v), a.alphabet());
}

Seq negate(const Seq& a) {
    std::vector<GaussInt> v;
    v.reserve(a.size());
    for (const auto& z : a.elems()) v.push_back(-z);
    return Seq(std::move(v), a.alphabet());
}

Seq conjugate(const Seq& a) {
    std::vector<GaussInt> v;
    v.reserve(a.size());
    for (const auto& z : a.elems()) v.push_back(z.conj());
    return Seq(std::move(v), a.alphabet());
}

Seq concat(const Seq& a, const Seq& b) {
    std::vector<GaussInt> v(a.elems().begin(), a.elems().end());
    v.insert(v.end(), b.elems().begin(), b.elems().end());
    return Seq(std::move(v), join(a.alphabet(), b.alphabet()));
}

Seq interleave(const Seq& a, const Seq& b) {
    require_equal_lengths(a, b, "interleave");
    std::vector<GaussInt> v;
    v.reserve(static_cast<size_t>(2) * a.size());
    for (int i = 0; i < a.size(); ++i) {
        v.push_back(a[i]);
        v.push_back(b[i]);
    }
    return Seq(std::move(v), join(a.alphabet(), b.alphabet()));
}

GaussInt inner_product(const Seq& a, const Seq& b) {
    require_equal_lengths(a, b, "inner_product");
    GaussInt s{};
    for (int i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

GaussInt hermitian_product(const Seq& a, const Seq& b) {
    require_equal_lengths(a, b, "hermitian_product");
    GaussInt s{};
    for (int i = 0; i < a.size(); ++i) s = s + a[i] * b[i].conj();
    return s;
}

Seq f_i(const Seq& a) {
    require_even(a, "f_i");
    std::vector<GaussInt> v(static_cast<size_t>(a.size()));
    for (int k = 0; k < a.size() / 2; ++k) {
        v[static_cast<size_t>(2 * k)] = a[2 * k + 1];
        v[static_cast<size_t>(2 * k + 1)] = -a[2 * k];
    }
    return Seq(std::move(v), a.alphabet());
}

Seq f_c(const Seq& a) {
    require_even(a, "f_c");
    const int h = a.size() / 2;
    std::vector<GaussInt> v;
    v.reserve(static_cast<size_t>(a.size()));
    for (int i = h; i < a.size(); ++i) v.push_back(a[i]);
    for (int i = 0; i < h; ++i) v.push_back(-a[i]);
    return Seq(std::move(v), a.alphabet());
}

Seq f_i_conj(const Seq& a) { return conjugate(f_i(a)); }
Seq f_c_conj(const Seq& a) { return conjugate(f_c(a)); }

std::vector<Seq> read_sequences(std::istream& in) {
    std::vector<Seq> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        bool blank = std::all_of(line.begin(), line.end(),
                                 [](unsigned char c) { return std::isspace(c); });
        if (blank) continue;
        out.push_back(Seq::parse(line));
    }
    return out;
}

std::vector<Seq> read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open sequence file '" + path + "'");
    return read_sequences(in);
}

}  // namespace compseq
