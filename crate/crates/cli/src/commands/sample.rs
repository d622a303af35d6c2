use std::fmt::Write;

use trexp_core::closed_form::{e_pair, f_closed};

use crate::cli::SampleArgs;
use crate::error::CliResult;
use crate::format::general;
use crate::input::finite;
use crate::report::write_file;

const DIGITS: usize = 12;

/// Rows `t, f(t), e1(alpha t, beta), e2(alpha t, beta)`.
pub fn table(alpha: f64, beta: f64, ts: &[f64]) -> String {
    let mut out = String::from("t,f,e1,e2\n");
    for &t in ts {
        let (e1, e2) = e_pair(alpha * t, beta);
        let f = f_closed(alpha, beta, t);
        let _ = writeln!(
            out,
            "{},{},{},{}",
            general(t, DIGITS),
            general(f, DIGITS),
            general(e1, DIGITS),
            general(e2, DIGITS)
        );
    }
    out
}

pub fn run(args: &SampleArgs) -> CliResult<()> {
    let alpha = finite("alpha", args.alpha)?;
    let beta = finite("beta", args.beta)?;
    write_file(&args.out, &table(alpha, beta, &args.t_range.points()))
}
