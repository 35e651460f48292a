from sqmv.cli import main

main()
