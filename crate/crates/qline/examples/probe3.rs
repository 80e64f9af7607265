use qline::params::SwitchingProfile;
use qline::oracle::{kernel_numeric, OracleSettings};
use qline::switching::spectral_kernel;

fn main() {
    // Reconstruct the worst case from criterion 1.
    let p = SwitchingProfile { ramp: 3.373e1, plateau: 5.980e-1 };
    // recover exact omega from the grid: 1e-3 * 1e6^(i/39), find i near 701.7
    let mut w = 0.0;
    for i in 0..40 {
        let x = 1e-3 * (1e6f64).powf(i as f64 / 39.0);
        if (x - 701.7).abs() < 30.0 { w = x; }
    }
    println!("omega = {w:.10e}");
    let ka = spectral_kernel(&p, w).value;
    for gp in [1024, 4096, 16384, 65536] {
        let s = OracleSettings { time_grid_points: gp, ..OracleSettings::default() };
        let kn = kernel_numeric(&p, w, &s);
        println!("grid {gp:>6}: K_num = {kn:.15e}  rel dev vs analytic = {:.3e}", (ka - kn).abs() / kn.abs().max(1e-300));
    }
    println!("K_analytic = {ka:.15e}");
    // sweep omega slightly to see sensitivity (near a sin zero?)
    for dw in [-1e-4, 0.0, 1e-4] {
        let ww = w + dw;
        let ka2 = spectral_kernel(&p, ww).value;
        let kn2 = kernel_numeric(&p, ww, &OracleSettings::default());
        println!("omega+{dw:+.0e}: Ka={ka2:.6e} Kn={kn2:.6e} dev={:.3e}", (ka2-kn2).abs()/kn2.abs().max(1e-300));
    }
}
