from laq.cli.main import main

raise SystemExit(main())
