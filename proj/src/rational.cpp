#include "platy/rational.hpp"

#include <cctype>

namespace platy {

std::string qstr(const Q& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Q parse_q(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("ParseError", "empty number");
    auto bad = [&] { return DomainError("ParseError", "not a rational: '" + raw + "'"); };
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos) throw bad();
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool negative = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        for (char c : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        Z num(ip + fp), den = 1;
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        Q r(num, den);
        r.canonicalize();
        return negative ? Q(-r) : r;
    }
    size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    bool seen_slash = false, digit = false;
    for (size_t j = i; j < s.size(); ++j) {
        if (s[j] == '/') {
            if (seen_slash || !digit) throw bad();
            seen_slash = true;
            digit = false;
        } else if (std::isdigit(static_cast<unsigned char>(s[j])))
            digit = true;
        else
            throw bad();
    }
    if (!digit) throw bad();
    if (s[0] == '+') s = s.substr(1);
    Q r;
    try {
        r = Q(s);
    } catch (...) {
        throw bad();
    }
    if (r.get_den() == 0) throw DomainError("ParseError", "zero denominator in '" + raw + "'");
    r.canonicalize();
    return r;
}

Q qabs(const Q& x) { return x < 0 ? Q(-x) : x; }
Q qmin(const Q& a, const Q& b) { return a < b ? a : b; }
Q qmax(const Q& a, const Q& b) { return a < b ? b : a; }
bool is_integer(const Q& x) { return x.get_den() == 1; }

long long to_ll(const Q& x) {
    if (!is_integer(x) || !x.get_num().fits_slong_p())
        throw DomainError("Unrepresentable", "expected a small integer, got " + qstr(x));
    return x.get_num().get_si();
}

Q qgcd(const Q& a, const Q& b) {
    if (a == 0) return qabs(b);
    if (b == 0) return qabs(a);
    // gcd(p/q, r/s) = gcd(p s, r q) / (q s)
    Z n1 = a.get_num() * b.get_den(), n2 = b.get_num() * a.get_den(), g;
    mpz_gcd(g.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());
    Q r(g, a.get_den() * b.get_den());
    r.canonicalize();
    return r;
}

Mat3 mat_identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
    return m;
}

IMat3 imat_identity() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 to_q(const IMat3& m) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = Q(static_cast<long>(m[i][j]));
    return r;
}

Vec3 to_q(const IVec3& v) { return {Q(static_cast<long>(v[0])), Q(static_cast<long>(v[1])), Q(static_cast<long>(v[2]))}; }

Mat3 mul(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return r;
}

Vec3 mul(const Mat3& a, const Vec3& v) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
    return r;
}

IMat3 mul(const IMat3& a, const IMat3& b) {
    IMat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return r;
}

Vec3 mul(const IMat3& a, const Vec3& v) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) {
        r[i] = 0;
        for (int j = 0; j < 3; ++j)
            if (a[i][j]) r[i] += Q(static_cast<long>(a[i][j])) * v[j];
    }
    return r;
}

IVec3 mul(const IMat3& a, const IVec3& v) {
    IVec3 r{};
    for (int i = 0; i < 3; ++i) r[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
    return r;
}

Mat3 transpose(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
    return r;
}

IMat3 transpose(const IMat3& a) {
    IMat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
    return r;
}

Q det(const Mat3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

long long det(const IMat3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

static Mat3 adjugate(const Mat3& a) {
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            // cyclic indices give the signed cofactor directly
            c[j][i] = a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1];
        }
    return c;
}

Mat3 inverse(const Mat3& a) {
    Q d = det(a);
    if (d == 0) throw DomainError("Singular", "matrix is singular");
    Mat3 c = adjugate(a);
    for (auto& row : c)
        for (auto& x : row) x /= d;
    return c;
}

IMat3 inverse(const IMat3& a) {
    long long d = det(a);
    if (d != 1 && d != -1) throw DomainError("NotUnimodular", "integer matrix has det " + std::to_string(d));
    Mat3 c = adjugate(to_q(a));
    IMat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = to_ll(c[i][j]) * d;
    return r;
}

Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 neg(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
Vec3 scale(const Q& s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

Q dot(const Mat3& g, const Vec3& a, const Vec3& b) {
    Q r = 0;
    for (int i = 0; i < 3; ++i) {
        if (a[i] == 0) continue;
        Q row = g[i][0] * b[0] + g[i][1] * b[1] + g[i][2] * b[2];
        r += a[i] * row;
    }
    return r;
}

Q norm(const Mat3& g, const Vec3& a) { return dot(g, a, a); }
bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

Mat3 congruent(const Mat3& g, const Mat3& b) { return mul(transpose(b), mul(g, b)); }

bool positive_definite(const Mat3& g) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (g[i][j] != g[j][i]) return false;
    Q m1 = g[0][0], m2 = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    return m1 > 0 && m2 > 0 && det(g) > 0;
}

// reduced row echelon form in place, returns pivot columns
static std::vector<int> rref(QMat& m, int n) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < n && r < static_cast<int>(m.size()); ++c) {
        int p = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Q inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (int j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

int rank(QMat m) {
    if (m.empty()) return 0;
    return static_cast<int>(rref(m, static_cast<int>(m[0].size())).size());
}

std::vector<QVec> nullspace(QMat m, int n) {
    auto piv = rref(m, n);
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<QVec> out;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        QVec v(n, Q(0));
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        out.push_back(v);
    }
    return out;
}

}  // namespace platy
