use algebroid::algebra::{AlgebraModel, ModelOptions};
use algebroid::criteria;
use algebroid::ideal::FracIdeal;
use algebroid::corpus;

fn main() {
    let spec = corpus::appendix_curve();
    let t0 = std::time::Instant::now();
    let model = AlgebraModel::build(&spec, &ModelOptions::default()).unwrap();
    println!("moduli {:?} delta {:?} built in {:?}", model.moduli(), model.delta(), t0.elapsed());
    let table = algebroid::semigroup::SemigroupTable::for_curve(&model).unwrap();
    println!("gamma box: {:?}", table.box_members().collect::<Vec<_>>());
    println!("symmetric: {}", table.is_symmetric());

    let t1 = std::time::Instant::now();
    let m = criteria::euler_module(&model).unwrap();
    println!("euler module gamma: {:?} ({:?})", m.gamma().unwrap(), t1.elapsed());
    let maxi = FracIdeal::maximal_ideal(&model).unwrap();
    println!("maximal ideal gamma: {:?}", maxi.gamma().unwrap());
    println!("euler criterion (9c): {:?}", criteria::euler_criterion(&model));

    let t2 = std::time::Instant::now();
    let iso = m.is_isomorphic_to(&maxi).unwrap();
    println!("M ~ m verdict: {:?} ({:?})", iso.holds(false), t2.elapsed());

    let t3 = std::time::Instant::now();
    let rp = criteria::rho_prime(&model).unwrap();
    println!("rho_prime = {rp} ({:?})", t3.elapsed());
    let t4 = std::time::Instant::now();
    let rv = criteria::rho(&model).unwrap();
    println!("rho = {rv} ({:?})", t4.elapsed());

    let t5 = std::time::Instant::now();
    let report = criteria::qh_report(&model).unwrap();
    println!("full report in {:?}: qh={} gorenstein={} rho={:?} rho'={}",
        t5.elapsed(), report.quasihomogeneous, report.gorenstein, report.rho, report.rho_prime);

    let t6 = std::time::Instant::now();
    let step = criteria::normalization_step(&model).unwrap();
    println!("normalization step: delta {:?} colength {} ({:?})",
        step.delta(), step.basis().dim() - model.basis().dim(), t6.elapsed());
    println!("total {:?}", t0.elapsed());
}
