#include "mbig/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace mbig {

namespace {

constexpr std::uint64_t kFieldCap = std::uint64_t(1) << 31;
constexpr std::uint64_t kTableCap = std::uint64_t(1) << 20;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- GF(p)[x] helpers used only for modulus construction -------------------

using ppoly = std::vector<std::uint32_t>; // low degree first, normalized

void ppoly_norm(ppoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ppoly ppoly_mulmod(const ppoly& a, const ppoly& b, const ppoly& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    // reduce mod (monic) mod
    std::size_t m = mod.size() - 1;
    for (std::size_t i = acc.size(); i-- > m;) {
        std::uint64_t c = acc[i] % p;
        if (!c) continue;
        acc[i] = 0;
        for (std::size_t j = 0; j < m; ++j)
            acc[i - m + j] = (acc[i - m + j] + std::uint64_t(p - mod[j] % p) * c) % p;
    }
    ppoly r(acc.begin(), acc.begin() + std::min(acc.size(), m));
    ppoly out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = std::uint32_t(r[i]);
    ppoly_norm(out);
    return out;
}

ppoly ppoly_powmod(ppoly base, std::uint64_t n, const ppoly& mod, std::uint32_t p) {
    ppoly r = {1};
    while (n) {
        if (n & 1) r = ppoly_mulmod(r, base, mod, p);
        base = ppoly_mulmod(base, base, mod, p);
        n >>= 1;
    }
    return r;
}

std::uint32_t pinv(std::uint32_t a, std::uint32_t p) {
    // Fermat; p prime, a != 0
    std::uint64_t r = 1, b = a % p, n = p - 2;
    while (n) {
        if (n & 1) r = r * b % p;
        b = b * b % p;
        n >>= 1;
    }
    return std::uint32_t(r);
}

ppoly ppoly_gcd(ppoly a, ppoly b, std::uint32_t p) {
    while (!b.empty()) {
        // a mod b
        std::uint32_t lead_inv = pinv(b.back(), p);
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[off + i] = std::uint32_t((a[off + i] + std::uint64_t(p - std::uint32_t(std::uint64_t(b[i]) * c % p))) % p);
            ppoly_norm(a);
        }
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin irreducibility test for monic f of degree e over GF(p).
bool irreducible_over_prime(const ppoly& f, std::uint32_t p) {
    std::size_t e = f.size() - 1;
    ppoly x = {0, 1};
    // x^(p^e) == x mod f
    ppoly t = x;
    for (std::size_t i = 0; i < e; ++i) t = ppoly_powmod(t, p, f, p);
    ppoly xr = x;
    ppoly_norm(xr);
    if (t != xr) return false;
    for (std::uint64_t r : prime_factors(e)) {
        ppoly u = x;
        for (std::size_t i = 0; i < e / r; ++i) u = ppoly_powmod(u, p, f, p);
        // gcd(u - x, f) must be 1
        ppoly d = u;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = std::uint32_t((d[1] + p - 1) % p);
        ppoly_norm(d);
        ppoly g = ppoly_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

Field::Field(std::uint32_t p_, std::uint32_t e_) : p(p_), e(e_) {
    if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (e < 1) fail(errc::bad_argument, "extension degree must be positive");
    std::uint64_t qq = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        qq *= p;
        if (qq > kFieldCap) fail(errc::field_too_large, "p^e exceeds the 2^31 field cap");
    }
    q = qq;
    if (e == 1) {
        modulus = {0, 1}; // x
    } else {
        // Least monic irreducible in low-degree-first lex order: odometer
        // over (c0, ..., c_{e-1}) with c0 most significant.
        std::vector<std::uint32_t> c(e, 0);
        for (;;) {
            ppoly f(c.begin(), c.end());
            f.push_back(1);
            if (irreducible_over_prime(f, p)) {
                modulus.assign(f.begin(), f.end());
                break;
            }
            std::size_t i = e;
            while (i-- > 0) {
                if (++c[i] < p) break;
                c[i] = 0;
                if (i == 0) fail(errc::bad_argument, "no irreducible found"); // unreachable
            }
        }
    }
    qm1_factors_ = prime_factors(q - 1);
    if (q <= kTableCap) build_tables();
}

felem Field::mul_raw(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    auto ca = coeffs(a);
    auto cb = coeffs(b);
    std::vector<std::uint64_t> acc(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        if (!ca[i]) continue;
        for (std::uint32_t j = 0; j < e; ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t(ca[i]) * cb[j]) % p;
    }
    for (std::size_t i = acc.size(); i-- > e;) {
        std::uint64_t c = acc[i];
        if (!c) continue;
        acc[i] = 0;
        for (std::uint32_t j = 0; j < e; ++j)
            acc[i - e + j] = (acc[i - e + j] + std::uint64_t(p - modulus[j]) * c) % p;
    }
    felem v = 0;
    for (std::uint32_t i = e; i-- > 0;) v = felem(std::uint64_t(v) * p + acc[i]);
    return v;
}

std::uint32_t Field::mult_order_nocache(felem a) const {
    std::uint64_t d = q - 1;
    for (std::uint64_t r : qm1_factors_) {
        while (d % r == 0) {
            felem t = 1, base = a;
            std::uint64_t n = d / r;
            while (n) {
                if (n & 1) t = mul(t, base);
                base = mul(base, base);
                n >>= 1;
            }
            if (t != 1) break;
            d /= r;
        }
    }
    return std::uint32_t(d);
}

const Field& Field::get(std::uint32_t p, std::uint32_t e) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, e))).first;
    return *it->second;
}

std::vector<std::uint32_t> Field::coeffs(felem a) const {
    std::vector<std::uint32_t> c(e);
    for (std::uint32_t i = 0; i < e; ++i) {
        c[i] = a % p;
        a /= p;
    }
    return c;
}

felem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != e) fail(errc::bad_argument, "coefficient vector has wrong length");
    felem v = 0;
    for (std::uint32_t i = e; i-- > 0;) {
        if (c[i] >= p) fail(errc::bad_argument, "coefficient out of range");
        v = felem(std::uint64_t(v) * p + c[i]);
    }
    return v;
}

felem Field::from_int(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p);
    if (r < 0) r += p;
    return felem(r);
}

felem Field::add(felem a, felem b) const {
    if (e == 1) {
        std::uint64_t s = std::uint64_t(a) + b;
        return felem(s >= p ? s - p : s);
    }
    felem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        std::uint32_t s = a % p + b % p;
        if (s >= p) s -= p;
        r += s * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return r;
}

felem Field::neg(felem a) const {
    if (e == 1) return a ? felem(p - a) : 0;
    felem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        std::uint32_t c = a % p;
        r += (c ? p - c : 0) * mult;
        a /= p;
        mult *= p;
    }
    return r;
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

void Field::build_tables() const {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (tables_built_) return;
    // least primitive element in lex order: odometer over coefficient
    // tuples (c0, ..., c_{e-1}) with c0 most significant
    felem g = 0;
    std::vector<std::uint32_t> c(e, 0);
    for (;;) {
        felem v = 0;
        for (std::uint32_t i = e; i-- > 0;) v = felem(std::uint64_t(v) * p + c[i]);
        if (v != 0 && mult_order_nocache(v) == q - 1) {
            g = v;
            break;
        }
        std::size_t i = e;
        bool done = true;
        while (i-- > 0) {
            if (++c[i] < p) {
                done = false;
                break;
            }
            c[i] = 0;
        }
        if (done) break; // unreachable: every finite field has a generator
    }
    gen_ = g;
    if (q <= kTableCap) {
        exp_.resize(q - 1);
        log_.assign(q, 0);
        felem cur = 1;
        for (std::uint64_t i = 0; i + 1 < q; ++i) {
            exp_[i] = cur;
            log_[cur] = std::uint32_t(i);
            cur = mul_raw(cur, g);
        }
    }
    tables_built_ = true;
}

felem Field::mul(felem a, felem b) const {
    if (e == 1) return felem(std::uint64_t(a) * b % p);
    if (tables_built_ && !exp_.empty()) {
        if (a == 0 || b == 0) return 0;
        std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
        if (s >= q - 1) s -= q - 1;
        return exp_[s];
    }
    return mul_raw(a, b);
}

felem Field::pow(felem a, std::int64_t n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    felem r = 1;
    std::uint64_t m = std::uint64_t(n);
    while (m) {
        if (m & 1) r = mul(r, a);
        a = mul(a, a);
        m >>= 1;
    }
    return r;
}

felem Field::inv(felem a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    if (e == 1) return felem(pinv(a, p));
    return pow(a, std::int64_t(q) - 2);
}

std::uint32_t Field::mult_order(felem a) const {
    if (a == 0) fail(errc::zero_element, "multiplicative order of zero");
    return mult_order_nocache(a);
}

felem Field::generator() const {
    build_tables();
    return gen_;
}

std::uint32_t Field::dlog(felem a) const {
    if (a == 0) fail(errc::zero_element, "discrete log of zero");
    build_tables();
    if (!log_.empty()) return log_[a];
    felem cur = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        if (cur == a) return std::uint32_t(i);
        cur = mul(cur, gen_);
    }
    fail(errc::bad_argument, "dlog: not in the multiplicative group");
}

std::uint64_t Field::lex_key(felem a) const {
    std::uint64_t key = 0;
    for (std::uint32_t i = 0; i < e; ++i) {
        key = key * p + a % p; // low-degree digit ends most significant
        a /= p;
    }
    return key;
}

felem embed(const Field& src, const Field& dst, felem a) {
    if (&src == &dst) return a;
    if (src.p != dst.p || dst.e % src.e != 0)
        fail(errc::no_embedding, "no embedding GF(" + std::to_string(src.p) + "^" + std::to_string(src.e) +
                                     ") -> GF(" + std::to_string(dst.p) + "^" + std::to_string(dst.e) + ")");
    if (src.e == 1) return a; // prime subfield is canonical
    static std::mutex mu;
    static std::map<std::pair<const Field*, const Field*>, felem> roots;
    felem root;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(&src, &dst);
        auto it = roots.find(key);
        if (it != roots.end()) {
            root = it->second;
        } else {
            // lexicographically least root of src.modulus in dst
            bool found = false;
            root = 0;
            std::vector<std::uint32_t> c(dst.e, 0);
            for (std::uint64_t count = 0; count < dst.q; ++count) {
                felem v = 0;
                for (std::uint32_t i = dst.e; i-- > 0;) v = felem(std::uint64_t(v) * dst.p + c[i]);
                // evaluate src.modulus at v over dst (Horner)
                felem acc = 0;
                for (std::size_t i = src.modulus.size(); i-- > 0;)
                    acc = dst.add(dst.mul(acc, v), dst.from_int(src.modulus[i]));
                if (acc == 0) {
                    root = v;
                    found = true;
                    break;
                }
                std::size_t i = dst.e;
                while (i-- > 0) {
                    if (++c[i] < dst.p) break;
                    c[i] = 0;
                }
            }
            if (!found) fail(errc::no_embedding, "modulus has no root in target field");
            roots.emplace(key, root);
        }
    }
    // evaluate a's coefficient polynomial at root
    auto c = src.coeffs(a);
    felem acc = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        acc = dst.add(dst.mul(acc, root), dst.from_int(c[i]));
    return acc;
}

} // namespace mbig
