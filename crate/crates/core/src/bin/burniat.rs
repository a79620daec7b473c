fn main() {
    burniat::cli::main()
}
