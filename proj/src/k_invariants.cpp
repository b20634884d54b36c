#include "busecoarse/k_invariants.hpp"

#include <sstream>

#include "busecoarse/errors.hpp"

namespace busecoarse {

AbelianGroupDescriptor AbelianGroupDescriptor::zero() { return {}; }

AbelianGroupDescriptor AbelianGroupDescriptor::integers() {
    AbelianGroupDescriptor g;
    g.kind_ = Kind::Z;
    return g;
}

AbelianGroupDescriptor AbelianGroupDescriptor::countable_product_of_z() {
    AbelianGroupDescriptor g;
    g.kind_ = Kind::CountableProductOfZ;
    return g;
}

AbelianGroupDescriptor AbelianGroupDescriptor::product(const std::vector<AbelianGroupDescriptor>& factors) {
    std::vector<AbelianGroupDescriptor> flat;
    for (const auto& f : factors) {
        switch (f.kind_) {
            case Kind::Zero:
                break;
            case Kind::CountableProductOfZ:
                return countable_product_of_z();
            case Kind::Z:
                flat.push_back(f);
                break;
            case Kind::FiniteProduct:
                flat.insert(flat.end(), f.factors_.begin(), f.factors_.end());
                break;
        }
    }
    if (flat.empty()) return zero();
    if (flat.size() == 1) return flat.front();
    AbelianGroupDescriptor g;
    g.kind_ = Kind::FiniteProduct;
    g.factors_ = std::move(flat);
    return g;
}

int AbelianGroupDescriptor::rank() const noexcept {
    switch (kind_) {
        case Kind::Zero:
            return 0;
        case Kind::Z:
            return 1;
        case Kind::FiniteProduct: {
            int r = 0;
            for (const auto& f : factors_) r += f.rank();
            return r;
        }
        case Kind::CountableProductOfZ:
            return -1;
    }
    return 0;
}

std::string AbelianGroupDescriptor::describe() const {
    switch (kind_) {
        case Kind::Zero:
            return "0";
        case Kind::Z:
            return "Z";
        case Kind::CountableProductOfZ:
            return "prod_{n in N} Z";
        case Kind::FiniteProduct: {
            std::ostringstream os;
            for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " x " : "") << factors_[i].describe();
            return os.str();
        }
    }
    return "?";
}

const char* to_string(AbelianGroupDescriptor::Kind kind) {
    switch (kind) {
        case AbelianGroupDescriptor::Kind::Zero:
            return "zero";
        case AbelianGroupDescriptor::Kind::Z:
            return "Z";
        case AbelianGroupDescriptor::Kind::FiniteProduct:
            return "finite_product";
        case AbelianGroupDescriptor::Kind::CountableProductOfZ:
            return "countable_product_of_Z";
    }
    return "?";
}

namespace {

void check_degree(int q) {
    if (q != 0 && q != 1) throw DomainError("degree must be 0 or 1");
}

}  // namespace

AbelianGroupDescriptor sphere_k_homology(int m, int q) {
    if (m < 0) throw DomainError("sphere dimension must be >= 0");
    check_degree(q);
    return m % 2 == q ? AbelianGroupDescriptor::integers() : AbelianGroupDescriptor::zero();
}

std::vector<int> xp_boundary_contributors(int q, int max_n) {
    check_degree(q);
    std::vector<int> out;
    for (int n = 1; n <= max_n; ++n)
        if (sphere_k_homology(n - 1, q).kind() == AbelianGroupDescriptor::Kind::Z) out.push_back(n);
    return out;
}

AbelianGroupDescriptor xp_boundary_k_truncated(int q, int max_n) {
    check_degree(q);
    if (max_n < 0) throw DomainError("truncation must be >= 0");
    std::vector<AbelianGroupDescriptor> factors;
    for (int n = 1; n <= max_n; ++n) factors.push_back(sphere_k_homology(n - 1, q));
    return AbelianGroupDescriptor::product(factors);
}

AbelianGroupDescriptor xp_boundary_k(int q) {
    check_degree(q);
    // n = 1, 2 is one full period of the parity rule in n.
    if (!xp_boundary_contributors(q, 2).empty()) return AbelianGroupDescriptor::countable_product_of_z();
    return AbelianGroupDescriptor::zero();
}

}  // namespace busecoarse
