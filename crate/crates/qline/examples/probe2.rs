use qline::*;

fn b(process: Process, model: CutoffModel, r: f64, t: f64) -> Bundle {
    validate(
        QubitConfig { omega: 1.0, lambda: 1.0, process },
        SmearingSpec { shape: SmearingShape::Gaussian, sigma: 1e-4 },
        CutoffSpec { model, epsilon: 5.0 },
        SwitchingProfile { ramp: r, plateau: t },
    ).unwrap()
}
fn p(bd: &Bundle) -> f64 { transition_probability(bd, &QuadratureSettings::default()).unwrap().p_over_lambda_sq }

fn main() {
    println!("Delta_GS(excitation, T=1) vs r   [and raw P_G, P_S]:");
    for &r in &[0.01, 0.03, 0.05, 0.1, 0.2, 0.3, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0] {
        let pg = p(&b(Process::Excitation, CutoffModel::Gaussian, r, 1.0));
        let ps = p(&b(Process::Excitation, CutoffModel::Sharp, r, 1.0));
        println!("  r={r:<6} P_G={pg:.6e} P_S={ps:.6e} Delta={:.4e} sign={}", sweep::relative_difference(pg, ps), if pg>ps {"G>S"} else {"S>G"});
    }
    println!("all pairs excitation T=1: r=0.1 vs r=10:");
    let names = ["G","L","E","S"];
    for i in 0..4 { for j in i+1..4 {
        let (a, c) = (CutoffModel::ALL[i], CutoffModel::ALL[j]);
        let d01 = sweep::relative_difference(p(&b(Process::Excitation, a, 0.1, 1.0)), p(&b(Process::Excitation, c, 0.1, 1.0)));
        let d10 = sweep::relative_difference(p(&b(Process::Excitation, a, 10.0, 1.0)), p(&b(Process::Excitation, c, 10.0, 1.0)));
        println!("  {}{}: 0.1 -> {d01:.4e}   10 -> {d10:.4e}   ok={}", names[i], names[j], d10 < d01);
    }}
}
