from fliess_prelie.run import main

raise SystemExit(main())
