from citeratio.cli import main

main()
