from colour_vertex import main

main()
