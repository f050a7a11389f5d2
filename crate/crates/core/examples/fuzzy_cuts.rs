//! Membership functions and their α-cuts, including the indicator of an
//! unordered interval.

use ofip::fuzzy_number::FuzzyNumber;
use ofip::interval::OrderedInterval;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tri = FuzzyNumber::triangular(1.0, 2.0, 4.0)?;
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        println!("triangular(1,2,4) cut at {alpha}: {:?}", tri.alpha_cut(alpha)?.cut);
    }
    let coarse = tri.alpha_cut(0.25)?;
    let fine = tri.alpha_cut(0.75)?;
    println!("higher cuts are nested: {}", fine.is_subset_of(&coarse));

    let band = FuzzyNumber::indicator_on(OrderedInterval::new(3.0, 2.0)?);
    println!("indicator on [3,2]_o: μ(2.5) = {}, μ(3.5) = {}", band.membership(2.5), band.membership(3.5));

    let pl = FuzzyNumber::piecewise_linear(vec![(0.0, 0.0), (1.0, 1.0), (2.0, 1.0), (3.0, 0.0)])?;
    println!("trapezoid cut at 0.5: {:?}", pl.alpha_cut(0.5)?.cut);
    println!("level 0 is rejected: {}", tri.alpha_cut(0.0).is_err());
    Ok(())
}
