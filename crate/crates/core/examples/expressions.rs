//! Parsing and evaluating algebra expressions, as the `sta eval` command does.
//!
//! Run with `cargo run --example expressions`.

use sta::cli::{eval, parse};

fn main() {
    let sources = [
        "g0*g0",
        "g1*g1",
        "e1*e2*e3",
        "exp(0.5*g0*g1)",
        "(1 + g0)^2",
        "~(g0*g1*g2)",
        "<g0*(g1 + g2)>0",
        "det(matrix(1 + e3))",
        "inv(1 + g0)",
        "g0*(",
    ];
    for src in sources {
        match parse(src) {
            Err(e) => println!("{src:<24} parse error: {e}"),
            Ok(expr) => match eval(&expr) {
                Ok(value) => println!("{src:<24} {expr}  =  {}", value.multivector()),
                Err(e) => println!("{src:<24} evaluation error: {e}"),
            },
        }
    }
}
