//! Cross-checks the numerical criteria against brute-force enumeration on
//! small ground sets.

use relkk::oracle::{
    achievable_fully_shellable_h, achievable_relative_f, enumeration_report, OracleConfig,
};
use relkk::realizability::{fully_cm_h_check, rel_f_check};

fn main() -> relkk::Result<()> {
    let config = OracleConfig::default();
    for n in 1..=4 {
        let achievable = achievable_relative_f(n, &config)?;
        let agree = achievable
            .iter()
            .all(|f| rel_f_check(f, n as u64).unwrap().is_accepted());
        println!(
            "[{n}]: {} relative f-vectors, all accepted: {agree}",
            achievable.len()
        );
    }
    let fs = achievable_fully_shellable_h(5, 2, &config)?;
    let agree = fs
        .iter()
        .all(|h| fully_cm_h_check(h, 5).unwrap().is_accepted());
    println!(
        "[5], d = 2: {} fully shellable h-vectors, all accepted: {agree}",
        fs.len()
    );

    let report = enumeration_report(3, &config)?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
