a = 1
b = 2
total = a + b
items = [total, a, b]
items[0] = items[1] + 7
print(-items[0])
print(total)
print(items)
