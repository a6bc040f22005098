//! Driving the command-line interface from code, as the `flamingo` binary does.
//!
//! Run with `cargo run --example command_line`.

fn main() {
    for args in [
        vec!["flamingo", "enumerate", "--n", "6", "--d", "2", "--kind", "wnc"],
        vec!["flamingo", "--pretty", "verify", "--suite", "csp", "--n", "9", "--d", "3"],
        vec!["flamingo", "--pretty", "verify", "--suite", "signs", "--n", "7", "--d", "2"],
    ] {
        let code = flamingo::cli::run(args);
        println!("exit status {code}\n");
    }
}
