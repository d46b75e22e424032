package cadence

func (x *handler) run() {
	if x.ready {
		if common.ArchivalEnabled {
			x.apply()
		}
		if a.History.EnableRead {
			x.apply()
		}
		if EnableRead {
			x.apply()
		}
		if a.Visibility.EnableRead {
			x.apply()
		}
	}
}
