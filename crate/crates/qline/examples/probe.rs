use qline::*;
use qline::sweep::*;

fn bundle(process: Process, shape: SmearingShape, sigma: f64, model: CutoffModel, eps: f64, r: f64, t: f64) -> Bundle {
    validate(
        QubitConfig { omega: 1.0, lambda: 1.0, process },
        SmearingSpec { shape, sigma },
        CutoffSpec { model, epsilon: eps },
        SwitchingProfile { ramp: r, plateau: t },
    ).unwrap()
}

fn p(b: &Bundle) -> f64 {
    transition_probability(b, &QuadratureSettings::default()).unwrap().p_over_lambda_sq
}

fn main() {
    let t0 = std::time::Instant::now();
    // defaults excitation/emission
    let pe = p(&bundle(Process::Excitation, SmearingShape::Gaussian, 1e-4, CutoffModel::Exponential, 5.0, 1.0, 1.0));
    let pm = p(&bundle(Process::Emission, SmearingShape::Gaussian, 1e-4, CutoffModel::Exponential, 5.0, 1.0, 1.0));
    println!("defaults: excitation q = {pe:.9e}   emission q = {pm:.9e}");

    // cutoff-scale sensitivity: emission, exponential, eps 0.5 vs 50
    let p_lo = p(&bundle(Process::Emission, SmearingShape::Gaussian, 1e-4, CutoffModel::Exponential, 0.5, 1.0, 1.0));
    let p_hi = p(&bundle(Process::Emission, SmearingShape::Gaussian, 1e-4, CutoffModel::Exponential, 50.0, 1.0, 1.0));
    println!("eps sensitivity (emission): P(0.1eps0)={p_lo:.6e} P(10eps0)={p_hi:.6e} delta={:.4}", relative_difference(p_lo, p_hi));
    // same for excitation
    let e_lo = p(&bundle(Process::Excitation, SmearingShape::Gaussian, 1e-4, CutoffModel::Exponential, 0.5, 1.0, 1.0));
    let e_hi = p(&bundle(Process::Excitation, SmearingShape::Gaussian, 1e-4, CutoffModel::Exponential, 50.0, 1.0, 1.0));
    println!("eps sensitivity (excitation): delta={:.4}", relative_difference(e_lo, e_hi));

    // dominance: emission defaults. shape pairs (exp cutoff eps0) vs cutoff pairs (gaussian shape sigma0)
    let shapes: Vec<f64> = SmearingShape::ALL.iter().map(|&s| p(&bundle(Process::Emission, s, 1e-4, CutoffModel::Exponential, 5.0, 1.0, 1.0))).collect();
    let cutoffs: Vec<f64> = CutoffModel::ALL.iter().map(|&m| p(&bundle(Process::Emission, SmearingShape::Gaussian, 1e-4, m, 5.0, 1.0, 1.0))).collect();
    let mut max_shape: f64 = 0.0;
    for i in 0..4 { for j in i+1..4 { max_shape = max_shape.max(relative_difference(shapes[i], shapes[j])); } }
    let mut max_cut: f64 = 0.0;
    for i in 0..4 { for j in i+1..4 { max_cut = max_cut.max(relative_difference(cutoffs[i], cutoffs[j])); } }
    println!("dominance: max shape delta = {max_shape:.3e}, max cutoff delta = {max_cut:.3e}, ratio = {:.3e}", max_shape/max_cut);

    // size insensitivity: cutoff-pair deltas across sigma in [0.1,10]*sigma0
    for pair in [(CutoffModel::Exponential, CutoffModel::Sharp), (CutoffModel::Gaussian, CutoffModel::Lorentzian), (CutoffModel::Exponential, CutoffModel::Gaussian)] {
        let mut deltas = vec![];
        for &sig in &[1e-5, 1e-4, 1e-3] {
            let pa = p(&bundle(Process::Emission, SmearingShape::Gaussian, sig, pair.0, 5.0, 1.0, 1.0));
            let pb = p(&bundle(Process::Emission, SmearingShape::Gaussian, sig, pair.1, 5.0, 1.0, 1.0));
            deltas.push(relative_difference(pa, pb));
        }
        let spread = deltas.iter().cloned().fold(f64::MIN, f64::max) - deltas.iter().cloned().fold(f64::MAX, f64::min);
        println!("size insensitivity {:?}-{:?}: deltas={:?} spread={spread:.3e}", pair.0, pair.1, deltas);
    }

    // convergence with eps: pair deltas at eps0 vs 100 eps0; ordering at 20 eps0
    println!("pair deltas at eps (emission, gaussian shape):");
    for &eps in &[5.0, 100.0, 500.0] {
        let q: Vec<f64> = CutoffModel::ALL.iter().map(|&m| p(&bundle(Process::Emission, SmearingShape::Gaussian, 1e-4, m, eps, 1.0, 1.0))).collect();
        print!("  eps={eps}: ");
        let names = ["G","L","E","S"];
        for i in 0..4 { for j in i+1..4 {
            print!("{}{}={:.3e} ", names[i], names[j], relative_difference(q[i], q[j]));
        }}
        println!();
    }

    // switching phenomenology
    let des = |r: f64, t: f64, proc: Process, m: CutoffModel| p(&bundle(proc, SmearingShape::Gaussian, 1e-4, m, 5.0, r, t));
    // a) excitation r=0.1: ES at T=100 vs T=1
    let d_es = |t: f64| {
        let pe_ = des(0.1, t, Process::Excitation, CutoffModel::Exponential);
        let ps_ = des(0.1, t, Process::Excitation, CutoffModel::Sharp);
        relative_difference(pe_, ps_)
    };
    println!("excitation r=0.1: Delta_ES(T=1)={:.4}, Delta_ES(T=100)={:.4}", d_es(1.0), d_es(100.0));
    // b) adiabatic: pair deltas at r=10 vs r=0.1, T=1, excitation
    for (a, b) in [(CutoffModel::Gaussian, CutoffModel::Lorentzian), (CutoffModel::Gaussian, CutoffModel::Exponential), (CutoffModel::Gaussian, CutoffModel::Sharp), (CutoffModel::Lorentzian, CutoffModel::Exponential), (CutoffModel::Lorentzian, CutoffModel::Sharp), (CutoffModel::Exponential, CutoffModel::Sharp)] {
        let d_fast = relative_difference(des(0.1, 1.0, Process::Excitation, a), des(0.1, 1.0, Process::Excitation, b));
        let d_slow = relative_difference(des(10.0, 1.0, Process::Excitation, a), des(10.0, 1.0, Process::Excitation, b));
        let em_fast_short = relative_difference(des(0.1, 1.0, Process::Emission, a), des(0.1, 1.0, Process::Emission, b));
        let em_fast_long = relative_difference(des(0.1, 100.0, Process::Emission, a), des(0.1, 100.0, Process::Emission, b));
        println!("pair {:?}-{:?}: exc r0.1={d_fast:.3e} r10={d_slow:.3e} | em T1={em_fast_short:.3e} T100={em_fast_long:.3e}", a, b);
    }
    // d) near r=1, large T: excitation deltas
    print!("excitation r=1, T=100 deltas: ");
    let q: Vec<f64> = CutoffModel::ALL.iter().map(|&m| des(1.0, 100.0, Process::Excitation, m)).collect();
    let names = ["G","L","E","S"];
    for i in 0..4 { for j in i+1..4 { print!("{}{}={:.3} ", names[i], names[j], relative_difference(q[i], q[j])); }}
    println!();
    println!("elapsed: {:?}", t0.elapsed());
}
