//! The command-line front end driven in-process.

fn main() {
    let runs: [&[&str]; 4] = [
        &[
            "kernel", "--space", "fock", "--n", "2", "--nu", "1", "--m", "1", "--t", "0.5,0.5",
        ],
        &[
            "norms",
            "--space",
            "ball",
            "--n",
            "2",
            "--alpha",
            "1",
            "--m",
            "1",
            "--max-degree",
            "2",
        ],
        &["verify", "--suite", "identities", "--n", "2"],
        &[
            "sweep", "--nu", "1", "--m", "1", "--n", "1", "--t", "0.3", "--radii", "5,10,20",
        ],
    ];
    for args in runs {
        println!("$ bergfock {}", args.join(" "));
        let out = bergfock::cli::run(std::iter::once("bergfock").chain(args.iter().copied()));
        print!("{}{}", out.stdout, out.stderr);
        println!("(exit {})\n", out.code);
    }
}
