//! Normal pencils built from `P_e(α)` and `Q_e` blocks.

use segre::arith::{frac, int};
use segre::cli::render_form;
use segre::symbol::{build_normal_form, p_block, q_block};

fn main() -> Result<(), segre::Error> {
    println!("P_3(5) =\n{}", p_block(3, &int(5)));
    println!("Q_3 =\n{}", q_block(3));
    for (symbol, roots) in [
        ("[2111]", vec![int(2), int(3), int(4), int(5)]),
        ("[32]", vec![int(2), frac(-1, 2)]),
        ("[(12)(11)]", vec![int(0), int(1)]),
    ] {
        let p = build_normal_form(&symbol.parse()?, &roots)?;
        println!("{symbol}");
        println!("    {} = 0", render_form(p.u()));
        println!("    {} = 0", render_form(p.v()));
    }
    Ok(())
}
