"""planeauto: polynomial automorphisms of the plane"""
import planeauto.cli

if __name__ == "__main__":
    planeauto.cli.main()
