from phys_sims_quadrotor.cli import main

raise SystemExit(main())
