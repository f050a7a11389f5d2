//! The classical inner-product results that the fuzzy checks reduce to:
//! p-norms, Gram-Schmidt and the identity residuals.

use num_complex::Complex64;
use ofip::classical::{classical_oracles, gram_schmidt, InnerProduct, PNorm, Vector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = Vector::real(&[1.0, 2.0, 3.0])?;
    for p in [PNorm::One, PNorm::Two, PNorm::Three, PNorm::Infinity] {
        println!("{p:?} norm of {x}: {}", p.eval(&x));
    }

    let ip = InnerProduct::weighted(vec![1.0, 2.0, 0.5])?;
    let z = Vector::new(vec![Complex64::new(1.0, 1.0), Complex64::new(0.0, -2.0), Complex64::new(3.0, 0.0)])?;
    let sys = gram_schmidt(&[x.clone(), z.clone(), Vector::basis(3, 1)?], &ip)?;
    for (i, e) in sys.vectors().iter().enumerate() {
        println!("e{}: {e}", i + 1);
    }
    let o = classical_oracles(&ip, &x, &z, &sys, 3)?;
    println!("Cauchy-Schwarz slack {:.6}", o.cs_slack);
    println!("parallelogram residual {:.2e}", o.parallelogram_residual);
    println!("Bessel partial sum {:.6} vs ‖x‖² {:.6}", o.bessel_partial_sum, o.norm_sqr_x);

    let dependent = gram_schmidt(&[x.clone(), x.scaled_real(2.0)], &InnerProduct::Standard);
    println!("dependent input: {}", dependent.unwrap_err());
    Ok(())
}
