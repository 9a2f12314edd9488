#include "qtatoms/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace qtatoms {

std::string basis_name(SFBasis b) {
    switch (b) {
        case SFBasis::m: return "m";
        case SFBasis::e: return "e";
        case SFBasis::h: return "h";
        case SFBasis::p: return "p";
        case SFBasis::s: return "s";
        case SFBasis::Htilde: return "Htilde";
    }
    return "?";
}

SFBasis basis_from_name(const std::string& name) {
    if (name == "m") return SFBasis::m;
    if (name == "e") return SFBasis::e;
    if (name == "h") return SFBasis::h;
    if (name == "p") return SFBasis::p;
    if (name == "s") return SFBasis::s;
    if (name == "Htilde") return SFBasis::Htilde;
    throw domain_error("unknown symmetric function basis '" + name + "'");
}

// -------------------------------------------------------- partition lists ---

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::recursive_mutex table_mutex;

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::recursive_mutex> lock(table_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return cache.emplace(n, std::move(out)).first->second;
}

int partition_index(int n, const Partition& lam) {
    const auto& ps = partitions_of(n);
    for (size_t i = 0; i < ps.size(); ++i)
        if (ps[i] == lam) return int(i);
    throw domain_error("partition_index: " + lam.str() + " is not a partition of " + std::to_string(n));
}

long z_of(const Partition& lam) {
    long z = 1;
    int i = 0;
    while (i < lam.length()) {
        int j = i;
        while (j < lam.length() && lam.part(j) == lam.part(i)) ++j;
        int mult = j - i;
        for (int k = 0; k < mult; ++k) z *= lam.part(i);
        for (int k = 2; k <= mult; ++k) z *= k;
        i = j;
    }
    return z;
}

// ------------------------------------------------- Murnaghan-Nakayama chi ---

namespace {

long chi_rec(const Partition& lam, const Partition& rho,
             std::map<std::pair<Partition, Partition>, long>& memo) {
    if (lam.size() == 0) return 1;
    auto key = std::make_pair(lam, rho);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int r = rho.part(0);
    std::vector<int> rest(rho.parts().begin() + 1, rho.parts().end());
    Partition rho2(rest);
    long acc = 0;
    int len = lam.length();
    // remove a border strip of size r spanning rows i..j (0-based, top at 0
    // of the sorted parts vector)
    for (int i = 0; i < len; ++i) {
        for (int j = i; j < len; ++j) {
            std::vector<int> mu(lam.parts());
            for (int k = i; k < j; ++k) mu[size_t(k)] = lam.part(k + 1) - 1;
            mu[size_t(j)] = lam.part(i) - r + (j - i);
            if (mu[size_t(j)] < 0) continue;
            bool ok = true;
            for (size_t k = 0; k + 1 < mu.size(); ++k)
                if (mu[k] < mu[k + 1]) { ok = false; break; }
            if (!ok) continue;
            // must remove at least one cell from every spanned row
            bool strip_ok = true;
            for (int k = i; k <= j; ++k)
                if (mu[size_t(k)] > lam.part(k) - 1) { strip_ok = false; break; }
            if (!strip_ok) continue;
            while (!mu.empty() && mu.back() == 0) mu.pop_back();
            long sign = ((j - i) % 2 == 0) ? 1 : -1;
            acc += sign * chi_rec(Partition(mu), rho2, memo);
        }
    }
    memo.emplace(key, acc);
    return acc;
}

}  // namespace

long sym_character(const Partition& lam, const Partition& rho) {
    if (lam.size() != rho.size()) throw domain_error("sym_character: size mismatch");
    static std::map<std::pair<Partition, Partition>, long> memo;
    std::lock_guard<std::recursive_mutex> lock(table_mutex);
    return chi_rec(lam, rho, memo);
}

// ---------------------------------------------------------------- SymFun ---

SymFun SymFun::unit(int degree, SFBasis basis, const Partition& lam, const QTScalar& c) {
    SymFun f(degree, basis);
    f.add(lam, c);
    return f;
}

QTScalar SymFun::coeff_of(const Partition& lam) const {
    auto it = coeff_.find(lam);
    return it == coeff_.end() ? QTScalar() : it->second;
}

void SymFun::add(const Partition& lam, const QTScalar& c) {
    if (c.is_zero()) return;
    if (lam.size() != degree_) throw domain_error("SymFun::add: wrong partition size");
    auto it = coeff_.find(lam);
    if (it == coeff_.end()) {
        coeff_[lam] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) coeff_.erase(it);
    }
}

SymFun SymFun::operator-() const {
    SymFun r(degree_, basis_);
    for (auto& [l, c] : coeff_) r.coeff_[l] = -c;
    return r;
}

SymFun SymFun::operator+(const SymFun& o) const {
    if (degree_ != o.degree_ || basis_ != o.basis_)
        throw domain_error("SymFun: degree or basis mismatch in +");
    SymFun r = *this;
    for (auto& [l, c] : o.coeff_) r.add(l, c);
    return r;
}

SymFun SymFun::operator-(const SymFun& o) const { return *this + (-o); }

SymFun SymFun::operator*(const QTScalar& c) const {
    SymFun r(degree_, basis_);
    if (c.is_zero()) return r;
    for (auto& [l, cc] : coeff_) r.coeff_[l] = cc * c;
    return r;
}

bool SymFun::operator==(const SymFun& o) const {
    return degree_ == o.degree_ && basis_ == o.basis_ && coeff_ == o.coeff_;
}

std::string SymFun::str() const {
    std::ostringstream os;
    os << "degree " << degree_ << " basis " << basis_name(basis_) << "\n";
    for (auto& lam : partitions_of(degree_)) {
        auto it = coeff_.find(lam);
        if (it == coeff_.end()) continue;
        os << basis_name(basis_) << lam.str() << ": " << it->second.str() << "\n";
    }
    return os.str();
}

SymFun SymFun::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw domain_error("SymFun::parse: empty input");
    std::istringstream h(line);
    std::string kw1, kw2, bname;
    int degree = 0;
    h >> kw1 >> degree >> kw2 >> bname;
    if (kw1 != "degree" || kw2 != "basis") throw domain_error("SymFun::parse: bad header");
    SymFun f(degree, basis_from_name(bname));
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto lb = line.find('[');
        auto rb = line.find(']');
        auto colon = line.find(':', rb);
        if (lb == std::string::npos || rb == std::string::npos || colon == std::string::npos)
            throw domain_error("SymFun::parse: bad line '" + line + "'");
        Partition lam = Partition::parse(line.substr(lb, rb - lb + 1));
        QTScalar c = QTScalar::parse(line.substr(colon + 1));
        f.add(lam, c);
    }
    return f;
}

// ------------------------------------------------------- base transitions ---

namespace {

using QMat = std::vector<std::vector<mpq_class>>;

// coefficient of m_mu in p_lambda: number of maps from the parts of lambda
// onto the positions of mu filling each capacity exactly
long p_to_m_count(const Partition& lam, const Partition& mu) {
    std::vector<int> cap(mu.parts().begin(), mu.parts().end());
    std::function<long(int)> rec = [&](int idx) -> long {
        if (idx == lam.length()) {
            for (int c : cap)
                if (c != 0) return 0;
            return 1;
        }
        long acc = 0;
        int part = lam.part(idx);
        for (size_t j = 0; j < cap.size(); ++j) {
            if (cap[j] >= part) {
                cap[j] -= part;
                acc += rec(idx + 1);
                cap[j] += part;
            }
        }
        return acc;
    };
    return rec(0);
}

// invert a rational matrix (small sizes)
QMat qmat_inverse(QMat a) {
    size_t n = a.size();
    QMat inv(n, std::vector<mpq_class>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw qt_error("qmat_inverse: singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        mpq_class d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

struct DegreeTables {
    int n = 0;
    // rows indexed by source partition, columns by target partition
    QMat s_to_p, p_to_s;   // s_to_p[l][r] = chi(l,r)/z_r ; p_to_s[r][l] = chi(l,r)
    QMat e_to_p, h_to_p;   // multiplicative expansions
    QMat p_to_e, p_to_h;
    QMat p_to_m, m_to_p;
};

// multiply p-expansions: vector of coefficients over partitions of possibly
// different degrees; result over partitions of the sum (free union of parts)
std::map<Partition, mpq_class> p_mul(const std::map<Partition, mpq_class>& a,
                                     const std::map<Partition, mpq_class>& b) {
    std::map<Partition, mpq_class> r;
    for (auto& [la, ca] : a)
        for (auto& [lb, cb] : b) {
            std::vector<int> parts = la.parts();
            parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
            std::sort(parts.rbegin(), parts.rend());
            r[Partition(parts)] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
    return r;
}

std::map<Partition, mpq_class> one_row_in_p(int k, bool elementary) {
    std::map<Partition, mpq_class> r;
    for (auto& rho : partitions_of(k)) {
        mpq_class c(1, z_of(rho));
        if (elementary && (k - rho.length()) % 2 == 1) c = -c;
        r[rho] = c;
    }
    return r;
}

const DegreeTables& degree_tables(int n) {
    static std::map<int, DegreeTables> cache;
    std::lock_guard<std::recursive_mutex> lock(table_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    DegreeTables T;
    T.n = n;
    const auto& ps = partitions_of(n);
    size_t N = ps.size();
    auto chi = [&](const Partition& l, const Partition& r) { return sym_character(l, r); };

    T.s_to_p.assign(N, std::vector<mpq_class>(N, 0));
    T.p_to_s.assign(N, std::vector<mpq_class>(N, 0));
    for (size_t l = 0; l < N; ++l)
        for (size_t r = 0; r < N; ++r) {
            long c = chi(ps[l], ps[r]);
            T.s_to_p[l][r] = mpq_class(c, z_of(ps[r]));
            T.p_to_s[r][l] = c;
        }
    T.e_to_p.assign(N, std::vector<mpq_class>(N, 0));
    T.h_to_p.assign(N, std::vector<mpq_class>(N, 0));
    for (size_t l = 0; l < N; ++l) {
        std::map<Partition, mpq_class> acc_e{{Partition(), 1}}, acc_h{{Partition(), 1}};
        for (int part : ps[l].parts()) {
            acc_e = p_mul(acc_e, one_row_in_p(part, true));
            acc_h = p_mul(acc_h, one_row_in_p(part, false));
        }
        for (auto& [rho, c] : acc_e) T.e_to_p[l][size_t(partition_index(n, rho))] = c;
        for (auto& [rho, c] : acc_h) T.h_to_p[l][size_t(partition_index(n, rho))] = c;
    }
    T.p_to_e = qmat_inverse(T.e_to_p);
    T.p_to_h = qmat_inverse(T.h_to_p);
    T.p_to_m.assign(N, std::vector<mpq_class>(N, 0));
    for (size_t l = 0; l < N; ++l)
        for (size_t m = 0; m < N; ++m) T.p_to_m[l][m] = p_to_m_count(ps[l], ps[m]);
    T.m_to_p = qmat_inverse(T.p_to_m);
    return cache.emplace(n, std::move(T)).first->second;
}

// apply a rational transition matrix to a coefficient map
SymFun apply_qmat(const SymFun& f, const QMat& mat, SFBasis target) {
    int n = f.degree();
    const auto& ps = partitions_of(n);
    SymFun out(n, target);
    for (auto& [lam, c] : f.coeff()) {
        size_t row = size_t(partition_index(n, lam));
        for (size_t col = 0; col < ps.size(); ++col) {
            const mpq_class& a = mat[row][col];
            if (a == 0) continue;
            out.add(ps[col], c * QTScalar(a));
        }
    }
    return out;
}

}  // namespace

// forward declaration (defined below with the Macdonald machinery)
namespace detail {
SymFun htilde_to_s(const SymFun& f);
SymFun s_to_htilde(const SymFun& f);
}  // namespace detail

SymFun convert(const SymFun& f, SFBasis target) {
    if (f.basis() == target) return f;
    int n = f.degree();
    const auto& T = degree_tables(n);
    // route everything through p
    SymFun p = [&] {
        switch (f.basis()) {
            case SFBasis::p: return f;
            case SFBasis::s: return apply_qmat(f, T.s_to_p, SFBasis::p);
            case SFBasis::e: return apply_qmat(f, T.e_to_p, SFBasis::p);
            case SFBasis::h: return apply_qmat(f, T.h_to_p, SFBasis::p);
            case SFBasis::m: return apply_qmat(f, T.m_to_p, SFBasis::p);
            case SFBasis::Htilde: {
                SymFun s = detail::htilde_to_s(f);
                return apply_qmat(s, T.s_to_p, SFBasis::p);
            }
        }
        throw domain_error("convert: unreachable");
    }();
    switch (target) {
        case SFBasis::p: return p;
        case SFBasis::s: return apply_qmat(p, T.p_to_s, SFBasis::s);
        case SFBasis::e: return apply_qmat(p, T.p_to_e, SFBasis::e);
        case SFBasis::h: return apply_qmat(p, T.p_to_h, SFBasis::h);
        case SFBasis::m: return apply_qmat(p, T.p_to_m, SFBasis::m);
        case SFBasis::Htilde:
            return detail::s_to_htilde(apply_qmat(p, T.p_to_s, SFBasis::s));
    }
    throw domain_error("convert: unreachable");
}

SymFun sf_multiply(const SymFun& f, const SymFun& g) {
    SymFun fp = convert(f, SFBasis::p), gp = convert(g, SFBasis::p);
    SymFun out(f.degree() + g.degree(), SFBasis::p);
    for (auto& [la, ca] : fp.coeff())
        for (auto& [lb, cb] : gp.coeff()) {
            std::vector<int> parts = la.parts();
            parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
            std::sort(parts.rbegin(), parts.rend());
            out.add(Partition(parts), ca * cb);
        }
    return convert(out, f.basis() == SFBasis::Htilde ? SFBasis::s : f.basis());
}

SymFun dp1(const SymFun& f) {
    if (f.degree() < 1) throw domain_error("dp1: degree must be at least 1");
    SymFun fp = convert(f, SFBasis::p);
    SymFun out(f.degree() - 1, SFBasis::p);
    for (auto& [lam, c] : fp.coeff()) {
        int ones = 0;
        for (int p : lam.parts())
            if (p == 1) ++ones;
        if (ones == 0) continue;
        std::vector<int> parts = lam.parts();
        parts.pop_back();  // parts are sorted descending; last one is a 1
        out.add(Partition(parts), c * QTScalar(ones));
    }
    SFBasis back = f.basis() == SFBasis::Htilde ? SFBasis::s : f.basis();
    return convert(out, back);
}

SymFun omega_invol(const SymFun& f) {
    SymFun fp = convert(f, SFBasis::p);
    SymFun out(f.degree(), SFBasis::p);
    for (auto& [lam, c] : fp.coeff()) {
        bool neg = ((lam.size() - lam.length()) % 2) == 1;
        out.add(lam, neg ? -c : c);
    }
    SFBasis back = f.basis() == SFBasis::Htilde ? SFBasis::s : f.basis();
    return convert(out, back);
}

SymFun down_invol(const SymFun& f) {
    SymFun w = omega_invol(f);
    SymFun out(w.degree(), w.basis());
    for (auto& [lam, c] : w.coeff()) out.add(lam, c.subst_invert());
    return out;
}

SymFun plethystic_scale(const SymFun& f, const std::function<QTScalar(int)>& factor) {
    SymFun fp = convert(f, SFBasis::p);
    SymFun out(f.degree(), SFBasis::p);
    for (auto& [lam, c] : fp.coeff()) {
        QTScalar m = c;
        for (int part : lam.parts()) m *= factor(part);
        out.add(lam, m);
    }
    SFBasis back = f.basis() == SFBasis::Htilde ? SFBasis::s : f.basis();
    return convert(out, back);
}

SymFun pleth_times_1mq(const SymFun& f) {
    return plethystic_scale(f, [](int k) {
        return QTScalar(1) - QTScalar::monomial(k, 0);
    });
}
SymFun pleth_times_1mt(const SymFun& f) {
    return plethystic_scale(f, [](int k) {
        return QTScalar(1) - QTScalar::monomial(0, k);
    });
}
SymFun pleth_div_1mq(const SymFun& f) {
    return plethystic_scale(f, [](int k) {
        return (QTScalar(1) - QTScalar::monomial(k, 0)).inverse();
    });
}
SymFun pleth_div_1mt(const SymFun& f) {
    return plethystic_scale(f, [](int k) {
        return (QTScalar(1) - QTScalar::monomial(0, k)).inverse();
    });
}

QTScalar hall_inner(const SymFun& f, const SymFun& g) {
    if (f.degree() != g.degree()) throw domain_error("hall_inner: degree mismatch");
    SymFun fp = convert(f, SFBasis::p), gp = convert(g, SFBasis::p);
    QTScalar acc;
    for (auto& [lam, c] : fp.coeff()) {
        QTScalar d = gp.coeff_of(lam);
        if (!d.is_zero()) acc += c * d * QTScalar(z_of(lam));
    }
    return acc;
}

QTScalar e_alphabet(int k, const std::vector<QTScalar>& monos) {
    if (k < 0 || k > int(monos.size())) throw domain_error("e_alphabet: k out of range");
    std::vector<QTScalar> e(size_t(k) + 1);
    e[0] = QTScalar(1);
    for (size_t i = 0; i < monos.size(); ++i)
        for (int j = std::min<int>(k, int(i) + 1); j >= 1; --j)
            e[size_t(j)] += e[size_t(j - 1)] * monos[i];
    return e[size_t(k)];
}

// --------------------------------------------------- Macdonald polynomials ---

namespace {

int g_htilde_cap = 8;

struct HtildeTables {
    std::vector<SymFun> table;                // s-basis, indexed like partitions_of(n)
    std::vector<std::vector<QTScalar>> kinv;  // inverse of K~ matrix, built lazily
    bool kinv_built = false;
};

std::mutex htilde_mutex;
std::map<int, HtildeTables>& htilde_cache() {
    static std::map<int, HtildeTables> c;
    return c;
}

// plethysm matrices: row nu, column lambda = coeff of s_lambda in
// s_nu[X(1-q)] (or [X(1-t)])
struct PlethMats {
    std::vector<std::vector<QTScalar>> aq, at;
};

const PlethMats& pleth_mats(int n) {
    static std::map<int, PlethMats> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    PlethMats P;
    const auto& ps = partitions_of(n);
    size_t N = ps.size();
    P.aq.assign(N, std::vector<QTScalar>(N));
    P.at.assign(N, std::vector<QTScalar>(N));
    for (size_t nu = 0; nu < N; ++nu) {
        SymFun s = SymFun::unit(n, SFBasis::s, ps[nu]);
        SymFun fq = pleth_times_1mq(s);
        SymFun ft = pleth_times_1mt(s);
        for (size_t l = 0; l < N; ++l) {
            P.aq[nu][l] = fq.coeff_of(ps[l]);
            P.at[nu][l] = ft.coeff_of(ps[l]);
        }
    }
    return cache.emplace(n, std::move(P)).first->second;
}

// Solve an overdetermined consistent rational system; returns empty when the
// coefficient rank is deficient or the system is inconsistent.
std::vector<mpq_class> solve_rational(std::vector<std::vector<mpq_class>> rows, size_t nunknowns) {
    size_t m = rows.size();
    size_t rank = 0;
    std::vector<size_t> pivot_of_col(nunknowns, size_t(-1));
    for (size_t col = 0; col < nunknowns && rank < m; ++col) {
        size_t piv = rank;
        while (piv < m && rows[piv][col] == 0) ++piv;
        if (piv == m) return {};
        std::swap(rows[rank], rows[piv]);
        mpq_class d = rows[rank][col];
        for (size_t c = col; c <= nunknowns; ++c) rows[rank][c] /= d;
        for (size_t r = 0; r < m; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            mpq_class f = rows[r][col];
            for (size_t c = col; c <= nunknowns; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    if (rank != nunknowns) return {};
    for (size_t r = rank; r < m; ++r)
        if (rows[r][nunknowns] != 0) return {};
    std::vector<mpq_class> x(nunknowns);
    for (size_t col = 0; col < nunknowns; ++col) x[col] = rows[pivot_of_col[col]][nunknowns];
    return x;
}

// Lagrange interpolation: values y_i at distinct rational points x_i give the
// unique polynomial of degree < #points, as a dense coefficient vector.
std::vector<mpq_class> lagrange(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
    size_t d = xs.size();
    std::vector<mpq_class> acc(d, 0);
    for (size_t i = 0; i < d; ++i) {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<mpq_class> basis{1};
        mpq_class denom = 1;
        for (size_t j = 0; j < d; ++j) {
            if (j == i) continue;
            std::vector<mpq_class> next(basis.size() + 1, 0);
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= xs[j] * basis[k];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        mpq_class scale = ys[i] / denom;
        for (size_t k = 0; k < basis.size(); ++k) acc[k] += scale * basis[k];
    }
    return acc;
}

// The triangularity characterization is solved pointwise on a rational grid
// and the (integer polynomial) coefficients are recovered by interpolation.
// Grid sizes come from the degree bounds deg_q <= n(mu'), deg_t <= n(mu);
// one extra point per direction cross-checks the bounds.
SymFun compute_htilde(int n, const Partition& mu) {
    const auto& ps = partitions_of(n);
    size_t N = ps.size();
    const auto& P = pleth_mats(n);
    Partition muc = mu.conjugate();
    int dq = int(n_stat(muc)), dt = int(n_stat(mu));

    std::vector<size_t> q_rows, t_rows;  // constrained Schur indices
    for (size_t l = 0; l < N; ++l) {
        if (!ps[l].dominates(mu)) q_rows.push_back(l);
        if (!ps[l].dominates(muc)) t_rows.push_back(l);
    }
    size_t norm_idx = size_t(partition_index(n, Partition({n})));

    for (long offset : {2L, 101L, 257L}) {
        // disjoint grids: the q = t diagonal can be singular
        std::vector<mpq_class> qvals, tvals;
        for (int i = 0; i <= dq + 1; ++i) qvals.push_back(offset + i);
        for (int j = 0; j <= dt + 1; ++j) tvals.push_back(offset + dq + 2 + j);

        // evaluate the plethysm matrices once per grid line
        auto eval_mat = [&](const std::vector<std::vector<QTScalar>>& mat,
                            const std::vector<size_t>& rows_sel, const mpq_class& v) {
            std::vector<std::vector<mpq_class>> out(rows_sel.size(), std::vector<mpq_class>(N));
            for (size_t r = 0; r < rows_sel.size(); ++r)
                for (size_t nu = 0; nu < N; ++nu)
                    out[r][nu] = mat[nu][rows_sel[r]].eval_at(v, v);
            return out;
        };
        std::vector<std::vector<std::vector<mpq_class>>> aq_eval, at_eval;
        for (auto& v : qvals) aq_eval.push_back(eval_mat(P.aq, q_rows, v));
        for (auto& v : tvals) at_eval.push_back(eval_mat(P.at, t_rows, v));

        bool grid_ok = true;
        // values[lambda][i][j]
        std::vector<std::vector<std::vector<mpq_class>>> values(
            N, std::vector<std::vector<mpq_class>>(qvals.size(),
                                                   std::vector<mpq_class>(tvals.size())));
        for (size_t i = 0; i < qvals.size() && grid_ok; ++i) {
            for (size_t j = 0; j < tvals.size() && grid_ok; ++j) {
                std::vector<std::vector<mpq_class>> rows;
                std::vector<mpq_class> norm_row(N + 1, 0);
                norm_row[norm_idx] = 1;
                norm_row[N] = 1;
                rows.push_back(std::move(norm_row));
                for (auto& row : aq_eval[i]) {
                    std::vector<mpq_class> r(N + 1, 0);
                    for (size_t nu = 0; nu < N; ++nu) r[nu] = row[nu];
                    rows.push_back(std::move(r));
                }
                for (auto& row : at_eval[j]) {
                    std::vector<mpq_class> r(N + 1, 0);
                    for (size_t nu = 0; nu < N; ++nu) r[nu] = row[nu];
                    rows.push_back(std::move(r));
                }
                auto sol = solve_rational(std::move(rows), N);
                if (sol.empty()) {
                    grid_ok = false;
                    break;
                }
                for (size_t l = 0; l < N; ++l) values[l][i][j] = sol[l];
            }
        }
        if (!grid_ok) continue;

        // interpolate on the (dq+1) x (dt+1) subgrid
        SymFun out(n, SFBasis::s);
        bool verified = true;
        for (size_t l = 0; l < N && verified; ++l) {
            std::vector<std::vector<mpq_class>> qcoeffs;  // per t grid column
            std::vector<mpq_class> qsub(qvals.begin(), qvals.begin() + dq + 1);
            for (int j = 0; j <= dt; ++j) {
                std::vector<mpq_class> ys;
                for (int i = 0; i <= dq; ++i) ys.push_back(values[l][size_t(i)][size_t(j)]);
                qcoeffs.push_back(lagrange(qsub, ys));
            }
            QTPoly poly;
            std::vector<mpq_class> tsub(tvals.begin(), tvals.begin() + dt + 1);
            for (int k = 0; k <= dq; ++k) {
                std::vector<mpq_class> ys;
                for (int j = 0; j <= dt; ++j) ys.push_back(qcoeffs[size_t(j)][size_t(k)]);
                auto tpoly = lagrange(tsub, ys);
                for (size_t e = 0; e < tpoly.size(); ++e) {
                    if (tpoly[e] == 0) continue;
                    if (tpoly[e].get_den() != 1)
                        throw qt_error("htilde: non-integer interpolated coefficient");
                    poly.add_term(k, int(e), mpz_class(tpoly[e].get_num()));
                }
            }
            QTScalar coeff = QTScalar(poly);
            // degree-bound cross-check at the extra grid points
            for (size_t j = 0; j < tvals.size() && verified; ++j)
                if (coeff.eval_at(qvals.back(), tvals[j]) != values[l][qvals.size() - 1][j])
                    verified = false;
            for (size_t i = 0; i < qvals.size() && verified; ++i)
                if (coeff.eval_at(qvals[i], tvals.back()) != values[l][i][tvals.size() - 1])
                    verified = false;
            out.add(ps[l], coeff);
        }
        if (verified) return out;
    }
    throw qt_error("htilde: interpolation grid failed for " + mu.str());
}

HtildeTables& htilde_tables_locked(int n) {
    auto& cache = htilde_cache();
    auto it = cache.find(n);
    if (it != cache.end() && !it->second.table.empty()) return it->second;
    if (n > g_htilde_cap)
        throw resource_error("htilde: degree " + std::to_string(n) +
                             " exceeds the configured cap " + std::to_string(g_htilde_cap));
    HtildeTables T;
    if (n == 0) {
        T.table.push_back(SymFun::unit(0, SFBasis::s, Partition()));
    } else {
        for (auto& mu : partitions_of(n)) T.table.push_back(compute_htilde(n, mu));
    }
    cache[n] = std::move(T);
    return cache[n];
}

}  // namespace

const std::vector<SymFun>& htilde_table(int n) {
    std::lock_guard<std::mutex> lock(htilde_mutex);
    return htilde_tables_locked(n).table;
}

SymFun htilde(const Partition& mu) {
    const auto& tab = htilde_table(mu.size());
    return tab[size_t(partition_index(mu.size(), mu))];
}

QTScalar ktilde(const Partition& lam, const Partition& mu) {
    return htilde(mu).coeff_of(lam);
}

namespace detail {

SymFun htilde_to_s(const SymFun& f) {
    if (f.basis() != SFBasis::Htilde) throw domain_error("htilde_to_s: wrong basis");
    const auto& tab = htilde_table(f.degree());
    SymFun out(f.degree(), SFBasis::s);
    for (auto& [mu, c] : f.coeff()) {
        const SymFun& H = tab[size_t(partition_index(f.degree(), mu))];
        for (auto& [lam, k] : H.coeff()) out.add(lam, c * k);
    }
    return out;
}

SymFun s_to_htilde(const SymFun& f) {
    if (f.basis() != SFBasis::s) throw domain_error("s_to_htilde: wrong basis");
    int n = f.degree();
    std::lock_guard<std::mutex> lock(htilde_mutex);
    auto& T = htilde_tables_locked(n);
    const auto& ps = partitions_of(n);
    size_t N = ps.size();
    if (!T.kinv_built) {
        // invert the K~ matrix: column mu of K is the s-expansion of Htilde_mu
        std::vector<std::vector<QTScalar>> a(N, std::vector<QTScalar>(N)), inv(N, std::vector<QTScalar>(N));
        for (size_t mu = 0; mu < N; ++mu)
            for (size_t l = 0; l < N; ++l) a[l][mu] = T.table[mu].coeff_of(ps[l]);
        for (size_t i = 0; i < N; ++i) inv[i][i] = QTScalar(1);
        for (size_t col = 0; col < N; ++col) {
            size_t piv = col;
            while (piv < N && a[piv][col].is_zero()) ++piv;
            if (piv == N) throw qt_error("s_to_htilde: singular Macdonald transition");
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            QTScalar d = a[col][col];
            for (size_t j = 0; j < N; ++j) {
                a[col][j] /= d;
                inv[col][j] /= d;
            }
            for (size_t r = 0; r < N; ++r) {
                if (r == col || a[r][col].is_zero()) continue;
                QTScalar fpiv = a[r][col];
                for (size_t j = 0; j < N; ++j) {
                    a[r][j] -= fpiv * a[col][j];
                    inv[r][j] -= fpiv * inv[col][j];
                }
            }
        }
        T.kinv = std::move(inv);
        T.kinv_built = true;
    }
    SymFun out(n, SFBasis::Htilde);
    for (auto& [lam, c] : f.coeff()) {
        size_t row = size_t(partition_index(n, lam));
        for (size_t mu = 0; mu < N; ++mu) {
            if (T.kinv[mu][row].is_zero()) continue;
            out.add(ps[mu], c * T.kinv[mu][row]);
        }
    }
    return out;
}

}  // namespace detail

SymFun nabla(const SymFun& f) {
    SymFun h = convert(f, SFBasis::Htilde);
    SymFun out(f.degree(), SFBasis::Htilde);
    for (auto& [mu, c] : h.coeff()) out.add(mu, c * t_weight(mu));
    return convert(out, f.basis());
}

void htilde_cache_clear() {
    std::lock_guard<std::mutex> lock(htilde_mutex);
    htilde_cache().clear();
}

int htilde_degree_cap() { return g_htilde_cap; }
void set_htilde_degree_cap(int cap) { g_htilde_cap = cap; }

std::string htilde_table_serialize(int n) {
    const auto& tab = htilde_table(n);
    std::ostringstream os;
    os << "htilde-table degree " << n << " count " << tab.size() << "\n";
    for (auto& f : tab) os << f.str() << "end\n";
    return os.str();
}

bool htilde_table_load(int n, const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) return false;
    std::istringstream h(line);
    std::string kw, kw2, kw3;
    int deg = -1;
    size_t count = 0;
    h >> kw >> kw2 >> deg >> kw3 >> count;
    if (kw != "htilde-table" || kw2 != "degree" || kw3 != "count" || deg != n) return false;
    const auto& ps = partitions_of(n);
    if (count != ps.size()) return false;
    std::vector<SymFun> table;
    std::string block;
    while (std::getline(is, line)) {
        if (line == "end") {
            try {
                table.push_back(SymFun::parse(block));
            } catch (const std::exception&) {
                return false;
            }
            block.clear();
        } else {
            block += line;
            block += "\n";
        }
    }
    if (table.size() != count) return false;
    for (size_t i = 0; i < count; ++i)
        if (table[i].degree() != n || table[i].basis() != SFBasis::s) return false;
    std::lock_guard<std::mutex> lock(htilde_mutex);
    HtildeTables T;
    T.table = std::move(table);
    htilde_cache()[n] = std::move(T);
    return true;
}

}  // namespace qtatoms
