//! The numeric core is generic over the scalar; exercise it at `f32`.
//! Tolerances scale with the precision, the structure does not.

use num_complex::Complex;

use qgraded::fock::{annihilator, creator_natural, scaled_residual, FockSpace};
use qgraded::param::{g_factor, generator_grade, QParam};
use qgraded::partner::solve_partners;
use qgraded::susy::build_model_1m1;
use qgraded::word::{normal_order, Factor, Generator, Word};

#[test]
fn defining_relation_at_single_precision() {
    let space = FockSpace::new(16);
    let q = QParam::<f32>::from_polar(0.4, 2.1).unwrap();
    let a = annihilator(&q, &space);
    let an = creator_natural(&q, &space);
    let lhs = a.mul(&an).unwrap();
    let rhs = an.mul(&a).unwrap().scale(q.value());
    let defect = lhs.matrix() - rhs.matrix();
    let eye = ndarray::Array2::<Complex<f32>>::eye(16);
    assert!(scaled_residual(&defect, &eye, 15) < 1e-5);
}

#[test]
fn limit_scalars_stay_exact_at_single_precision() {
    let minus = generator_grade(&QParam::<f32>::new(Complex::new(-1.0, 0.0)).unwrap());
    assert_eq!(g_factor(&minus, &minus), Complex::new(-1.0f32, 0.0));
}

#[test]
fn model_and_solver_at_single_precision() {
    let space = FockSpace::new(12);
    let m = build_model_1m1::<f32>(&space);
    for n in 0..10 {
        let expect = if n % 2 == 1 { n as f32 } else { 0.0 };
        assert!((m.hamiltonians.h_ss.matrix()[[n, n]].re - expect).abs() < 1e-4);
    }

    let q = QParam::<f32>::new(Complex::new(1.0, 0.0)).unwrap();
    let sols = solve_partners(&q);
    assert_eq!(sols.len(), 2);
    assert!((sols[1].qbar.value().re + 1.0).abs() < 1e-6);
}

#[test]
fn rewriter_is_scalar_independent() {
    let q = QParam::<f32>::from_polar(0.5, 1.0).unwrap();
    let w = Word::new(vec![
        Factor { gen: Generator::A, q, exponent: 1 },
        Factor { gen: Generator::ANat, q, exponent: 1 },
    ]);
    let nf = normal_order(&w).unwrap();
    // coefficients are exact integers regardless of the scalar
    assert_eq!(nf.coefficient(0, 0).coefficients(), &[1]);
    assert_eq!(nf.coefficient(1, 1).coefficients(), &[0, 1]);
}
