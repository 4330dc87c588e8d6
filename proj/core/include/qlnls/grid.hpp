#ifndef QLNLS_GRID_HPP
#define QLNLS_GRID_HPP

#include <complex>
#include <cstdlib>
#include <memory>
#include <new>
#include <vector>

namespace qlnls {

// 64-byte aligned allocator so field storage is always acceptable to the
// SIMD FFT kernels (plans are created on buffers with the same alignment).
template <class T>
struct AlignedAllocator {
    using value_type = T;
    static constexpr std::size_t alignment = 64;

    AlignedAllocator() = default;
    template <class U>
    AlignedAllocator(const AlignedAllocator<U>&) {}

    T* allocate(std::size_t n) {
        return static_cast<T*>(::operator new(n * sizeof(T), std::align_val_t(alignment)));
    }
    void deallocate(T* p, std::size_t) noexcept {
        ::operator delete(p, std::align_val_t(alignment));
    }
    bool operator==(const AlignedAllocator&) const { return true; }
    bool operator!=(const AlignedAllocator&) const { return false; }
};

using complexd = std::complex<double>;
using cvector = std::vector<complexd, AlignedAllocator<complexd>>;

/// Uniform periodic grid on L*[-pi, pi): xs[j] = L*(-pi + 2 pi j / N).
/// Wavenumbers ks[j] = m_j / L in the standard DFT layout
/// m = 0, 1, ..., N/2-1, -N/2, ..., -1; the Nyquist mode sits at index N/2.
struct Grid {
    int n = 0;
    double scale = 0.0; // the L in L*[-pi, pi)
    std::vector<double> xs;
    std::vector<double> ks;
    int nyquist_index = 0;

    double spacing() const { return 2.0 * 3.14159265358979323846 * scale / n; }
    // integer mode number of coefficient index j
    int mode_number(int j) const { return j < n / 2 ? j : j - n; }
};

// n must be a power of two >= 4, scale > 0; throws ValidationError.
std::shared_ptr<const Grid> make_grid(int n, double scale);

// Same contract, but keeps externally supplied sample points (e.g. parsed
// from a CSV snapshot) verbatim,so round-trips are byte-identical. The
// samples must match the formula to 1e-9 relative.
std::shared_ptr<const Grid> make_grid_with_samples(int n, double scale, std::vector<double> xs);

} // namespace qlnls

#endif
