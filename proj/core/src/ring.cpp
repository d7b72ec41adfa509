#include "cihomol/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cihomol {

Ring::Ring(Fp field, std::vector<unsigned> exps) {
    if (exps.empty()) throw std::invalid_argument("Ring: need at least one variable");
    for (unsigned a : exps)
        if (a < 2) throw std::invalid_argument("Ring: exponents must be >= 2");
    auto d = std::make_shared<Data>(Data{field, std::move(exps), 1, {}});
    d->strides.assign(d->exps.size(), 1);
    for (std::size_t i = d->exps.size(); i-- > 0;) {
        std::size_t below = (i + 1 < d->exps.size()) ? d->strides[i + 1] * d->exps[i + 1] : 1;
        d->strides[i] = below;
    }
    for (unsigned a : d->exps) d->length *= a;
    d_ = std::move(d);
}

std::size_t Ring::basis_index(const std::vector<unsigned>& e) const {
    if (e.size() != codim()) throw std::invalid_argument("Ring: exponent vector length");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] >= d_->exps[i]) throw std::invalid_argument("Ring: exponent out of range");
        idx += e[i] * d_->strides[i];
    }
    return idx;
}

std::vector<unsigned> Ring::exponent_of(std::size_t index) const {
    std::vector<unsigned> e(codim());
    for (std::size_t i = 0; i < codim(); ++i) {
        e[i] = static_cast<unsigned>(index / d_->strides[i]);
        index %= d_->strides[i];
    }
    return e;
}

std::size_t Ring::shift_index(std::size_t index, std::size_t var) const {
    std::size_t digit = (index / d_->strides[var]) % d_->exps[var];
    if (digit + 1 >= d_->exps[var]) return npos;
    return index + d_->strides[var];
}

std::pair<std::size_t, std::size_t> Ring::predecessor(std::size_t index) const {
    if (index == 0) throw std::invalid_argument("Ring: the constant monomial has no predecessor");
    for (std::size_t i = 0; i < codim(); ++i) {
        std::size_t digit = (index / d_->strides[i]) % d_->exps[i];
        if (digit > 0) return {i, index - d_->strides[i]};
    }
    throw std::logic_error("Ring: corrupt basis index");
}

std::string Ring::spec_string() const {
    std::ostringstream os;
    os << "p=" << field().p() << ";exps=";
    for (std::size_t i = 0; i < codim(); ++i) {
        if (i) os << ',';
        os << d_->exps[i];
    }
    return os.str();
}

std::string Ring::variable_name(std::size_t i) const {
    static const char* names[] = {"x", "y", "z", "w"};
    if (codim() <= 4) return names[i];
    return "x" + std::to_string(i + 1);
}

LinearForm::LinearForm(Fp field, std::vector<std::uint64_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = field_.reduce(c);
    std::size_t lead = coeffs_.size();
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i]) { lead = i; break; }
    if (lead == coeffs_.size())
        throw std::invalid_argument("LinearForm: coefficients all zero");
    std::uint64_t s = field_.inv(coeffs_[lead]);
    if (s != 1)
        for (auto& c : coeffs_) c = field_.mul(c, s);
}

LinearForm LinearForm::variable(const Ring& ring, std::size_t i) {
    std::vector<std::uint64_t> c(ring.codim(), 0);
    c.at(i) = 1;
    return LinearForm(ring.field(), std::move(c));
}

LinearForm LinearForm::parse(const Ring& ring, const std::string& text) {
    for (std::size_t i = 0; i < ring.codim(); ++i)
        if (text == ring.variable_name(i) || text == "x" + std::to_string(i + 1))
            return variable(ring, i);
    std::vector<std::uint64_t> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("LinearForm: cannot parse '" + text +
                                        "' (expected a variable name or comma list of coefficients)");
        coeffs.push_back(std::stoull(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (coeffs.size() != ring.codim())
        throw std::invalid_argument("LinearForm: expected " + std::to_string(ring.codim()) +
                                    " coefficients");
    return LinearForm(ring.field(), std::move(coeffs));
}

std::string LinearForm::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs_[i]);
    }
    return s;
}

std::size_t LinearForm::axis() const {
    std::size_t found = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (found != static_cast<std::size_t>(-1)) return static_cast<std::size_t>(-1);
        found = i;
    }
    return found;
}

std::vector<LinearForm> enumerate_points(const Ring& ring) {
    const Fp f = ring.field();
    const std::size_t c = ring.codim();
    const std::uint64_t p = f.p();
    std::vector<LinearForm> pts;
    for (std::size_t lead = 0; lead < c; ++lead) {
        // first nonzero coordinate at `lead`, normalized to 1
        std::size_t tail = c - lead - 1;
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < tail; ++i) combos *= p;
        for (std::uint64_t v = 0; v < combos; ++v) {
            std::vector<std::uint64_t> coeffs(c, 0);
            coeffs[lead] = 1;
            std::uint64_t rest = v;
            for (std::size_t i = c; i-- > lead + 1;) {
                coeffs[i] = rest % p;
                rest /= p;
            }
            pts.emplace_back(f, std::move(coeffs));
        }
    }
    return pts;
}

std::size_t Embedding::rank() const {
    std::size_t r = 1;
    for (unsigned u : powers) r *= u;
    return r;
}

Embedding power_subring_embedding(const Ring& ring, const std::vector<unsigned>& u) {
    if (u.size() != ring.codim())
        throw std::invalid_argument("power_subring_embedding: wrong number of powers");
    std::vector<unsigned> sub_exps(ring.codim());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 1 || ring.exps()[i] % u[i] != 0)
            throw std::invalid_argument("power_subring_embedding: u_" + std::to_string(i + 1) +
                                        " does not divide exponent " +
                                        std::to_string(ring.exps()[i]));
        sub_exps[i] = ring.exps()[i] / u[i];
        if (sub_exps[i] < 2)
            throw std::invalid_argument(
                "power_subring_embedding: quotient exponent " + std::to_string(sub_exps[i]) +
                " < 2 at position " + std::to_string(i + 1));
    }
    return Embedding{ring, Ring(ring.field(), std::move(sub_exps)), u};
}

} // namespace cihomol
