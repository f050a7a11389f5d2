//! Label-wise arithmetic on ordered intervals, directly and through the
//! expression language.
//!
//! `cargo run --example interval_calculator -- "[3,4] (-) [2,10]"`

use ofip::calc;
use ofip::interval::OrderedInterval;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = OrderedInterval::new(3.0, 4.0)?;
    let y = OrderedInterval::new(2.0, 10.0)?;
    let d = x.checked_sub(y)?;
    println!("{x} ⊖ {y} = {d}, canonical {}", d.canonical());
    println!("({x} ⊕ {y}) ⊖ {y} = {}", x.checked_add(y)?.checked_sub(y)?);
    println!("{x} ⊖ {x} = {}", x.checked_sub(x)?);
    println!("|{d}| = {}", d.abs());
    println!("{d} ⊆ [-10,10]_o: {}", d.is_subset_of(&OrderedInterval::new(10.0, -10.0)?));
    println!("{x} ⪰ {d}: {}", x.geq(&d));

    let exprs: Vec<String> = std::env::args().skip(1).collect();
    let exprs = if exprs.is_empty() {
        vec!["2*[3,4] (-) abs([1,-6])".to_string(), "([1,2] (+) [1,1]) (*) [3,4]".to_string()]
    } else {
        exprs
    };
    for e in exprs {
        match calc::evaluate(&e) {
            Ok(v) => println!("{e} = {v}"),
            Err(err) => println!("{e}: {err}"),
        }
    }
    Ok(())
}
