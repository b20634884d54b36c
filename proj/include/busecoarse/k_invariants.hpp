#pragma once

#include <string>
#include <vector>

namespace busecoarse {

/// Symbolic abelian group, kept in canonical form.
class AbelianGroupDescriptor {
public:
    enum class Kind { Zero, Z, FiniteProduct, CountableProductOfZ };

    static AbelianGroupDescriptor zero();
    static AbelianGroupDescriptor integers();
    static AbelianGroupDescriptor countable_product_of_z();
    /**
     * Product of finitely many factors. Nested finite products are flattened,
     * Zero factors are dropped, an empty product is Zero, a single factor is
     * itself, and any countable factor absorbs the rest (a countable product of
     * Z times finitely many Z is again a countable product of Z).
     */
    static AbelianGroupDescriptor product(const std::vector<AbelianGroupDescriptor>& factors);

    Kind kind() const noexcept { return kind_; }
    /// Factors of a FiniteProduct; empty otherwise.
    const std::vector<AbelianGroupDescriptor>& factors() const noexcept { return factors_; }
    /// Number of Z factors (1 for Z, 0 for Zero, -1 for the countable product).
    int rank() const noexcept;

    std::string describe() const;
    friend bool operator==(const AbelianGroupDescriptor&, const AbelianGroupDescriptor&) = default;

private:
    Kind kind_ = Kind::Zero;
    std::vector<AbelianGroupDescriptor> factors_;
};

const char* to_string(AbelianGroupDescriptor::Kind kind);

/// Reduced K-homology of S^m in degree q (mod 2): Z when m = q mod 2, else Zero.
AbelianGroupDescriptor sphere_k_homology(int m, int q);

/// Product over n = 1..max_n of the reduced K-homology of S^(n-1) in degree q.
AbelianGroupDescriptor xp_boundary_k_truncated(int q, int max_n);

/// Indices n <= max_n whose sphere S^(n-1) contributes a Z factor in degree q.
std::vector<int> xp_boundary_contributors(int q, int max_n);

/**
 * The full product over all n. The factor sequence is 2-periodic in n, so one
 * period decides it: a Z inside the period recurs infinitely often and the
 * product is CountableProductOfZ.
 */
AbelianGroupDescriptor xp_boundary_k(int q);

}  // namespace busecoarse
