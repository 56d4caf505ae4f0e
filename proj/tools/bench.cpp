// Timing comparison between the serial reference paths and the OpenMP
// kernels: TMM spectra, Hopfield maps, and phase-diagram temperature grids.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cavpol/coupling.hpp"
#include "cavpol/materials.hpp"
#include "cavpol/phasediagram.hpp"
#include "cavpol/polariton.hpp"
#include "cavpol/stack.hpp"
#include "cavpol/tmm.hpp"

using namespace cavpol;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif

    auto gaas = builtin_material("GaAs");
    auto alas = builtin_material("AlAs");
    LayerStack stack = build_dbr_cavity(gaas, gaas, alas, 1, 20, 20, 850.0);

    {
        std::vector<SpectrumPoint> out;
        double s = time_ms([&] { out = spectrum(stack, 700.0, 1000.0, 4001, Exec::Serial); });
        double p = time_ms([&] { out = spectrum(stack, 700.0, 1000.0, 4001, Exec::Parallel); });
        report("spectrum 4001 pts", s, p);
    }

    ExcitonParams exciton = builtin_exciton("GaAsQW");
    {
        std::vector<HopfieldPoint> out;
        double s = time_ms([&] {
            out = hopfield_map(0.05, 3.0, 1600, -30.0, 30.0, 1600, exciton, Exec::Serial);
        });
        double p = time_ms([&] {
            out = hopfield_map(0.05, 3.0, 1600, -30.0, 30.0, 1600, exciton, Exec::Parallel);
        });
        report("hopfield map 1600x1600", s, p);
    }

    {
        StructureSpec spec;
        spec.name = "bench";
        spec.g_mev = 12.0;
        spec.exciton = exciton;
        spec.detuning = {0.0, 1458.6, 0.0134};
        spec.n_per_antinode = 4;
        spec.total_qw_count = 16;
        std::vector<double> grid(512);
        for (int i = 0; i < 512; ++i) grid[i] = 10.0 + i * 590.0 / 511.0;
        PhaseDiagram out;
        double s = time_ms([&] { out = build_phase_diagram(spec, grid, 0.01, Exec::Serial); });
        double p = time_ms([&] { out = build_phase_diagram(spec, grid, 0.01, Exec::Parallel); });
        report("phase diagram 512 T pts", s, p);
    }
    return 0;
}
