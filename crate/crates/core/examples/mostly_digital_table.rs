//! Rebuild the mostly-digital rate table and compare it with the printed values.

use uwb_capacity::explorer::{check_table_iv, reproduce_table_iv};
use uwb_capacity::output::{render_human, write_rows, OutputFormat};

fn main() -> uwb_capacity::Result<()> {
    let rows = reproduce_table_iv();
    print!("{}", render_human(&rows));

    let check = check_table_iv(&rows)?;
    println!();
    write_rows(&check.comparisons, OutputFormat::Human, std::io::stdout())?;
    println!(
        "all within {}: {} (max relative error {:.2e})",
        check.tolerance,
        check.passed(),
        check.max_relative_error()
    );
    Ok(())
}
