from algorithms.cli.main import main

main()
