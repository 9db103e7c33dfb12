#include "glq/io.hpp"

#include <sstream>

namespace glq {

std::string mat_to_text(const Mat& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m.at(i, j).to_text();
        }
    }
    return out;
}

Mat parse_mat(const std::string& text, const FieldSpec& f) {
    std::vector<std::vector<uint16_t>> rows;
    const std::string& chunk = text;
    bool done = false;
    size_t start = 0;
    while (!done) {
        size_t semi = chunk.find(';', start);
        std::string part = semi == std::string::npos ? chunk.substr(start)
                                                     : chunk.substr(start, semi - start);
        done = semi == std::string::npos;
        start = semi + 1;
        std::istringstream is(part);
        std::vector<uint16_t> row;
        std::string tok;
        while (is >> tok) row.push_back(f.parse(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix text");
    size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ParseError("ragged matrix text");
    Mat m(f, static_cast<int>(rows.size()), static_cast<int>(cols));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j)
            m.setval(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
    return m;
}

std::string window_to_text(const Window& w) {
    std::ostringstream os;
    os << w.row_minus() << ' ' << w.alpha().size() << ' ' << w.row_plus() << " / "
       << w.col_minus() << ' ' << w.beta().size() << ' ' << w.col_plus() << '\n'
       << mat_to_text(w.mat()) << '\n';
    return os.str();
}

Window parse_window(const std::string& text, const FieldSpec& f, int alpha_lo) {
    size_t nl = text.find('\n');
    if (nl == std::string::npos) throw ParseError("window text needs a header line");
    std::string header = text.substr(0, nl);
    std::string body = text.substr(nl + 1);

    std::istringstream hs(header);
    int rm, as, rp, cm, bs, cp;
    std::string slash;
    if (!(hs >> rm >> as >> rp >> slash >> cm >> bs >> cp) || slash != "/")
        throw ParseError("bad window header '" + header + "'");
    if (rm < 0 || as < 0 || rp < 0 || cm < 0 || bs < 0 || cp < 0)
        throw ParseError("negative size in window header");
    int n = rm + as + rp;
    if (n != cm + bs + cp) throw ParseError("window header is not square");

    Mat mat = n == 0 ? Mat(f, 0, 0) : parse_mat(body, f);
    if (mat.rows() != n || mat.cols() != n) throw ParseError("window matrix size does not match the header");

    ObjectA alpha{alpha_lo, alpha_lo + as};
    int beta_lo = alpha_lo - rm + cm;
    ObjectA beta{beta_lo, beta_lo + bs};
    return Window(alpha, beta, rm, rp, cm, cp, std::move(mat));
}

std::string colligation_to_text(const Colligation& g) {
    std::ostringstream os;
    os << g.m() << ' ' << g.inner() << '\n' << mat_to_text(g.mat()) << '\n';
    return os.str();
}

Colligation parse_colligation(const std::string& text, const FieldSpec& f) {
    size_t nl = text.find('\n');
    if (nl == std::string::npos) throw ParseError("colligation text needs a header line");
    std::istringstream hs(text.substr(0, nl));
    int m, inner;
    if (!(hs >> m >> inner) || m < 0 || inner < 0)
        throw ParseError("bad colligation header");
    Mat mat = (m + inner) == 0 ? Mat(f, 0, 0) : parse_mat(text.substr(nl + 1), f);
    if (mat.rows() != m + inner) throw ParseError("colligation matrix size does not match the header");
    return Colligation(m, std::move(mat));
}

std::string kappa_to_text(const KappaTable& t) {
    std::ostringstream os;
    for (int i = 0; i < 3; ++i)
        os << t.k[i][0] << ' ' << t.k[i][1] << ' ' << t.k[i][2] << '\n';
    os << "rows " << t.row_minus << " . " << t.row_plus << "  cols " << t.col_minus << " . "
       << t.col_plus << '\n';
    return os.str();
}

nlohmann::json field_to_json(const FieldSpec& f) {
    return nlohmann::json{{"p", f.p()}, {"l", f.l()}, {"modulus", f.modulus()}};
}

const FieldSpec& field_from_json(const nlohmann::json& j) {
    if (!j.contains("p") || !j.contains("l")) throw ParseError("field json needs p and l");
    std::optional<std::vector<int>> modulus;
    if (j.contains("modulus")) modulus = j["modulus"].get<std::vector<int>>();
    return FieldSpec::make(j["p"].get<int>(), j["l"].get<int>(), modulus);
}

nlohmann::json relation_to_json(const LinRel& r) {
    nlohmann::json basis = nlohmann::json::array();
    for (int i = 0; i < r.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < r.space().ambient(); ++j)
            row.push_back(r.space().basis().at(i, j).to_text());
        basis.push_back(row);
    }
    return nlohmann::json{{"m", r.src_dim()}, {"n", r.tgt_dim()}, {"basis", basis}};
}

LinRel relation_from_json(const nlohmann::json& j, const FieldSpec& f) {
    if (!j.contains("m") || !j.contains("n") || !j.contains("basis"))
        throw ParseError("relation json needs m, n and basis");
    int m = j["m"].get<int>(), n = j["n"].get<int>();
    if (m < 0 || n < 0) throw ParseError("negative relation dimension");
    const auto& basis = j["basis"];
    Mat rows(f, static_cast<int>(basis.size()), m + n);
    int i = 0;
    for (const auto& row : basis) {
        if (static_cast<int>(row.size()) != m + n) throw ParseError("relation basis row length mismatch");
        int jj = 0;
        for (const auto& entry : row) rows.setval(i, jj++, f.parse(entry.get<std::string>()));
        ++i;
    }
    return LinRel(m, n, Subspace(f, m + n, rows));
}

nlohmann::json coset_to_json(const Coset& c) {
    return nlohmann::json{{"alpha", {c.alpha().lo, c.alpha().hi}},
                          {"beta", {c.beta().lo, c.beta().hi}},
                          {"chi", relation_to_json(c.chi())},
                          {"eta", c.eta()},
                          {"field", field_to_json(c.field())}};
}

Coset coset_from_json(const nlohmann::json& j) {
    for (const char* key : {"alpha", "beta", "chi", "eta", "field"})
        if (!j.contains(key)) throw ParseError(std::string("coset json needs ") + key);
    const FieldSpec& f = field_from_json(j["field"]);
    ObjectA alpha{j["alpha"][0].get<int>(), j["alpha"][1].get<int>()};
    ObjectA beta{j["beta"][0].get<int>(), j["beta"][1].get<int>()};
    return Coset(alpha, beta, relation_from_json(j["chi"], f), j["eta"].get<int>());
}

nlohmann::json kappa_to_json(const KappaTable& t) {
    return nlohmann::json{
        {"kappa", {{t.k[0][0], t.k[0][1], t.k[0][2]},
                   {t.k[1][0], t.k[1][1], t.k[1][2]},
                   {t.k[2][0], t.k[2][1], t.k[2][2]}}},
        {"row_minus", t.row_minus},
        {"row_plus", t.row_plus},
        {"col_minus", t.col_minus},
        {"col_plus", t.col_plus}};
}

}  // namespace glq
