x = eval(input())
k = eval(input())
print(x and k)
print(x or k)
print(not x)
print(x != k)
print(1 if x and not k else 0)
