#include "compseq/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace compseq {

SeqMatrix::SeqMatrix(std::vector<Seq> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw DomainError("matrix needs at least one row");
    const int n = rows_.front().size();
    for (const auto& r : rows_)
        if (r.size() != n)
            throw DomainError("ragged matrix: row lengths " + std::to_string(n) + " and " +
                              std::to_string(r.size()));
}

Seq SeqMatrix::column(int j) const {
    if (j < 0 || j >= cols()) throw DomainError("column index out of range");
    std::vector<GaussInt> v;
    v.reserve(rows_.size());
    for (const auto& r : rows_) v.push_back(r[j]);
    return Seq(std::move(v), alphabet());
}

Alphabet SeqMatrix::alphabet() const {
    Alphabet a = rows_.front().alphabet();
    for (const auto& r : rows_) a = join(a, r.alphabet());
    return a;
}

SeqMatrix SeqMatrix::column_slice(int lo, int hi) const {
    if (lo < 0 || hi > cols() || lo >= hi) throw DomainError("bad column range");
    std::vector<Seq> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
        std::vector<GaussInt> v(r.elems().begin() + lo, r.elems().begin() + hi);
        out.emplace_back(std::move(v), r.alphabet());
    }
    return SeqMatrix(std::move(out));
}

SeqMatrix SeqMatrix::negated() const {
    std::vector<Seq> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(negate(r));
    return SeqMatrix(std::move(out));
}

SeqMatrix SeqMatrix::conjugated() const {
    std::vector<Seq> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(conjugate(r));
    return SeqMatrix(std::move(out));
}

SeqMatrix SeqMatrix::concat(const SeqMatrix& a, const SeqMatrix& b) {
    if (a.rows() != b.rows())
        throw DomainError("row-wise concat requires equal row counts");
    std::vector<Seq> out;
    out.reserve(a.rows_.size());
    for (int i = 0; i < a.rows(); ++i) out.push_back(compseq::concat(a.row(i), b.row(i)));
    return SeqMatrix(std::move(out));
}

SeqMatrix SeqMatrix::interleave(const SeqMatrix& a, const SeqMatrix& b) {
    if (a.rows() != b.rows())
        throw DomainError("row-wise interleave requires equal row counts");
    std::vector<Seq> out;
    out.reserve(a.rows_.size());
    for (int i = 0; i < a.rows(); ++i) out.push_back(compseq::interleave(a.row(i), b.row(i)));
    return SeqMatrix(std::move(out));
}

std::string SeqMatrix::str() const {
    std::string s;
    for (const auto& r : rows_) {
        s += r.str();
        s += '\n';
    }
    return s;
}

SeqMatrix MoMatrix::set(int i) const {
    if (i < 0 || i >= sets) throw DomainError("set index out of range");
    const int w = set_cols();
    return matrix.column_slice(i * w, (i + 1) * w);
}

std::vector<SeqMatrix> MoMatrix::split() const {
    std::vector<SeqMatrix> out;
    out.reserve(static_cast<size_t>(sets));
    for (int i = 0; i < sets; ++i) out.push_back(set(i));
    return out;
}

std::vector<SeqMatrix> read_matrices(std::istream& in) {
    std::vector<SeqMatrix> out;
    std::vector<Seq> rows;
    std::string line;
    auto flush = [&] {
        if (!rows.empty()) {
            out.emplace_back(std::move(rows));
            rows.clear();
        }
    };
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        bool blank = std::all_of(line.begin(), line.end(),
                                 [](unsigned char c) { return std::isspace(c); });
        if (blank) {
            flush();
            continue;
        }
        rows.push_back(Seq::parse(line));
    }
    flush();
    return out;
}

std::vector<SeqMatrix> read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open matrix file '" + path + "'");
    return read_matrices(in);
}

void write_matrices(std::ostream& out, std::span<const SeqMatrix> mats) {
    for (size_t k = 0; k < mats.size(); ++k) {
        if (k) out << '\n';
        out << mats[k].str();
    }
}

}  // namespace compseq
